// rplane <command> [options]
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for bad
// arguments, a bad config file, or inputs outside an operation's domain.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rplane/errors.hpp"
#include "rplane/hecke_words.hpp"
#include "rplane/qforms.hpp"
#include "rplane/report.hpp"
#include "rplane/scans.hpp"
#include "rplane/verify.hpp"

using namespace rplane;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kCommands{
    "alpha-table",   "verify-intertwine", "verify-lemma22",  "verify-transfer", "verify-identity-223", "bound-scan",
    "averaging-check", "poincare-coeffs", "growth-scan", "ramanujan", "all"};

struct Options {
  std::string command;
  std::vector<int> weights;
  std::vector<long> primes;
  std::optional<std::int64_t> cutoff;
  int trunc = kDefaultTruncation;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
  std::string table;
  int kmax = 24;
  long pmax = 97;
  std::vector<int> ms;
  std::optional<std::int64_t> M;
  std::vector<int> js;
  std::optional<int> nmax;
  std::optional<int> samples;
  bool timing = false;
};

std::vector<std::int64_t> widen(const std::vector<long>& v) { return {v.begin(), v.end()}; }

VerificationReport run_ramanujan(const Options& o) {
  RamanujanConfig c;
  if (!o.weights.empty()) c.weights = o.weights;
  c.pmax = o.pmax;
  c.trunc = o.trunc;
  return verify_ramanujan(c);
}

VerificationReport run_alpha(const Options& o) {
  AlphaConfig c;
  c.K = o.kmax;
  if (!o.table.empty()) {
    const std::string csv = alpha_table(c.K).to_csv();
    if (o.table == "-") {
      std::cout << csv;
    } else {
      std::ofstream f(o.table);
      if (!(f << csv)) throw UsageError("cannot write alpha table to " + o.table);
    }
  }
  return alpha_table_check(c);
}

VerificationReport run_intertwine(const Options& o) {
  IntertwineConfig c;
  if (!o.ms.empty()) c.ms = o.ms;
  if (o.samples) c.samples = *o.samples;
  if (o.tol) c.tol = *o.tol;
  c.seed = o.seed;
  return verify_intertwine(c);
}

VerificationReport run_cosets(const Options& o) {
  CosetFormConfig c;
  if (o.cutoff) c.bound = *o.cutoff;
  if (o.M) c.Ms = {*o.M};
  if (o.tol) c.tol = *o.tol;
  return verify_coset_forms(c);
}

VerificationReport run_transfer(const Options& o) {
  TransferConfig c;
  if (!o.primes.empty()) c.primes = widen(o.primes);
  if (!o.ms.empty()) c.ms = o.ms;
  if (o.M) c.max_M = *o.M;
  if (o.samples) c.samples = *o.samples;
  if (o.tol) c.tol = *o.tol;
  c.seed = o.seed;
  return verify_transfer(c);
}

VerificationReport run_identity(const Options& o) {
  IdentityConfig c;
  if (!o.js.empty()) c.js = o.js;
  if (o.M) c.M = *o.M;
  if (o.samples) c.samples = *o.samples;
  if (o.tol) c.tol = *o.tol;
  c.seed = o.seed;
  return verify_rotation_identity(c);
}

VerificationReport run_bound(const Options& o) {
  BoundScanConfig c;
  if (!o.js.empty()) c.js = o.js;
  if (o.M) c.M = *o.M;
  if (o.cutoff) c.cutoff = *o.cutoff;
  if (o.tol) c.slope_tol = *o.tol;
  c.threads = o.threads;
  return bound_scan(c, bound_family());
}

VerificationReport run_averaging(const Options& o) {
  AveragingConfig c;
  if (!o.primes.empty()) c.primes = widen(o.primes);
  if (o.M) c.M = *o.M;
  if (o.samples) c.samples = *o.samples;
  if (o.tol) c.tol = *o.tol;
  c.seed = o.seed;
  return averaging_check(c);
}

VerificationReport run_poincare(const Options& o) {
  PoincareCoeffConfig c;
  if (o.weights.size() > 1) throw UsageError("poincare-coeffs takes a single --weight");
  if (!o.weights.empty()) c.m = o.weights.front() - 1;
  if (o.M) c.M = *o.M;
  if (o.cutoff) c.cutoff = *o.cutoff;
  if (o.tol) c.tol = *o.tol;
  c.threads = o.threads;
  return poincare_coeffs(c);
}

VerificationReport run_growth(const Options& o) {
  GrowthConfig c;
  if (o.primes.size() > 1) throw UsageError("growth-scan takes a single --prime");
  if (!o.primes.empty()) c.p = o.primes.front();
  if (o.weights.size() > 1) throw UsageError("growth-scan takes a single --weight");
  if (!o.weights.empty()) c.m = o.weights.front() - 1;
  if (o.js.size() > 1) throw UsageError("growth-scan takes a single --j");
  if (!o.js.empty()) c.j = o.js.front();
  if (o.M) c.M = *o.M;
  if (o.cutoff) c.cutoff = *o.cutoff;
  if (o.nmax) c.n_max = *o.nmax;
  c.threads = o.threads;
  return growth_scan(c, growth_default_test(c.m));
}

using Runner = VerificationReport (*)(const Options&);

const std::map<std::string, Runner> kRunners{
    {"alpha-table", run_alpha},         {"verify-intertwine", run_intertwine}, {"verify-lemma22", run_cosets},
    {"verify-transfer", run_transfer},  {"verify-identity-223", run_identity}, {"bound-scan", run_bound},
    {"averaging-check", run_averaging}, {"poincare-coeffs", run_poincare},     {"growth-scan", run_growth},
    {"ramanujan", run_ramanujan},
};

// Acceptance order: criteria 1 through 10.
const std::vector<std::string> kAllOrder{"ramanujan",           "alpha-table",     "verify-intertwine",
                                         "verify-lemma22",      "verify-transfer", "verify-identity-223",
                                         "averaging-check",     "bound-scan",      "poincare-coeffs",
                                         "growth-scan"};

VerificationReport run(const Options& o) {
  if (o.command != "all") {
    VerificationReport rep = kRunners.at(o.command)(o);
    rep.seed = o.seed;
    return rep;
  }
  VerificationReport all;
  all.command = "all";
  all.seed = o.seed;
  Options defaults;
  defaults.seed = o.seed;
  defaults.threads = o.threads;
  for (const auto& name : kAllOrder) {
    defaults.command = name;
    all.merge(kRunners.at(name)(defaults));
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and exact checks for planar Hecke operators and level-one modular forms."};
  app.set_config("--config", "", "Read options from a key=value file (keys are the long option names)");
  app.allow_config_extras(false);
  app.get_formatter()->column_width(34);

  Options o;
  app.add_option("command", o.command, "Check to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--weight", o.weights,
                 "Weight(s): ramanujan (default 12 16 18 20 22 26), poincare-coeffs and growth-scan (default 12)");
  app.add_option("--prime", o.primes,
                 "Prime(s): verify-transfer and averaging-check (default 2 3), growth-scan (default 2)");
  app.add_option("--cutoff", o.cutoff,
                 "Max-norm truncation B: bound-scan and poincare-coeffs (default 200), growth-scan (120), "
                 "verify-lemma22 (20)");
  app.add_option("--trunc", o.trunc, "q-expansion truncation N")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tol", o.tol,
                 "Tolerance of the command's check family (defaults: 1e-9 identities, 1e-10 closed forms, "
                 "1e-8 transfer, 1e-3 Poincare ratios, 0.25 tail slope)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed of the random sample points")->capture_default_str();
  if (const char* env = std::getenv("RPLANE_THREADS")) {
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(env, &used);
      if (used != std::strlen(env) || n == 0 || n > 4096) throw std::invalid_argument(env);
      o.threads = static_cast<unsigned>(n);
    } catch (const std::exception&) {
      std::cerr << "RPLANE_THREADS must be a positive integer, got '" << env << "'\n";
      return kExitUsage;
    }
  }
  app.add_option("--threads", o.threads, "Worker threads for lattice sums (default from RPLANE_THREADS, else 1)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Report format")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_option("--table", o.table, "alpha-table: also write the (k,l,r,alpha) CSV here ('-' for stdout)");
  app.add_option("--kmax", o.kmax, "alpha-table: largest power k")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--pmax", o.pmax, "ramanujan: largest prime")->capture_default_str();
  app.add_option("--m", o.ms, "Theta index m: verify-intertwine and verify-transfer (default 11 13)");
  app.add_option("--M", o.M,
                 "Index M: verify-identity-223, averaging-check, bound-scan, poincare-coeffs, growth-scan "
                 "(default 1); largest M for verify-transfer (6); single M for verify-lemma22 (default 1 2 3)")
      ->check(CLI::PositiveNumber);
  app.add_option("--j", o.js, "Rotation order j: verify-identity-223 (1 2 3), bound-scan (0 3), growth-scan (3)");
  app.add_option("--nmax", o.nmax, "growth-scan: largest N (default 3)")->check(CLI::NonNegativeNumber);
  app.add_option("--samples", o.samples, "Random samples: verify-intertwine (200), verify-identity-223 (50), averaging-check (20), verify-transfer (10 z values)")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "Record wall time in the report (makes output run-dependent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep = run(o);
    if (o.timing) rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = emit(rep, o.format == "csv" ? ReportFormat::Csv : ReportFormat::Json);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!(f << text)) {
        std::cerr << "error: cannot write report to " << o.out << "\n";
        return kExitUsage;
      }
    }
    return rep.pass() ? kExitPass : kExitFail;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}
