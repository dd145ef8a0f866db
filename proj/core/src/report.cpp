#include "rplane/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "rplane/errors.hpp"

namespace rplane {

bool VerificationReport::pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

void VerificationReport::add(std::string id, double value, double budget, bool ok) {
  entries.push_back({std::move(id), format_double(value), format_double(budget), ok});
}

void VerificationReport::add(std::string id, std::string value, std::string budget, bool ok) {
  entries.push_back({std::move(id), std::move(value), std::move(budget), ok});
}

void VerificationReport::param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
void VerificationReport::param(std::string key, double value) { param(std::move(key), format_double(value)); }

void VerificationReport::merge(const VerificationReport& other) {
  for (auto e : other.entries) {
    e.id = other.command + "/" + e.id;
    entries.push_back(std::move(e));
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string emit(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "command,id,value,budget,verdict\n";
    for (const auto& e : r.entries)
      os << csv_field(r.command) << ',' << csv_field(e.id) << ',' << csv_field(e.value) << ',' << csv_field(e.budget)
         << ',' << (e.pass ? "pass" : "fail") << '\n';
    return os.str();
  }
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"id", e.id}, {"value", e.value}, {"budget", e.budget}, {"verdict", e.pass ? "pass" : "fail"}});
  j["summary"] = r.pass() ? "pass" : "fail";
  j["seed"] = r.seed;
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  return j.dump(2) + "\n";
}

VerificationReport parse_report_json(const std::string& text) {
  VerificationReport r;
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    for (const auto& e : j.at("entries"))
      r.entries.push_back({e.at("id").get<std::string>(), e.at("value").get<std::string>(),
                           e.at("budget").get<std::string>(), e.at("verdict").get<std::string>() == "pass"});
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("wall_seconds")) r.wall_seconds = j.at("wall_seconds").get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("parse_report_json: ") + ex.what());
  }
  return r;
}

}  // namespace rplane
