#pragma once

// Machine-readable verification records.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rplane {

struct ReportEntry {
  std::string id;
  std::string value;   // decimal string (exact for rationals, %.17g for doubles)
  std::string budget;  // tolerance or bound the value is compared against
  bool pass = true;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReportEntry> entries;
  std::uint64_t seed = 0;
  std::optional<double> wall_seconds;

  bool pass() const;
  void add(std::string id, double value, double budget, bool pass);
  void add(std::string id, std::string value, std::string budget, bool pass);
  void param(std::string key, std::string value);
  void param(std::string key, double value);
  /// Appends every entry of another report, prefixing ids with its command.
  void merge(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { Json, Csv };

/// %.17g, with "inf" / "-inf" / "nan" spelled out.
std::string format_double(double x);

std::string emit(const VerificationReport& report, ReportFormat format);
VerificationReport parse_report_json(const std::string& text);

}  // namespace rplane
