#include "rplane/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "rplane/distributions.hpp"
#include "rplane/errors.hpp"
#include "rplane/hecke_words.hpp"
#include "rplane/lattice.hpp"
#include "rplane/plane_rep.hpp"
#include "rplane/qforms.hpp"
#include "rplane/scans.hpp"

namespace rplane {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  cplx complex_unit() { return {uniform(-1, 1), uniform(-1, 1)}; }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  // Polynomial of total degree <= degree times a Gaussian with a random
  // complex width and a small real frequency.
  TestFunction atom(int degree) {
    GaussAtom at;
    at.coeff = complex_unit();
    Poly2 poly;
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j) poly.add_term(i, j, complex_unit());
    at.poly = poly;
    at.zpar = {uniform(-1, 1), uniform(0.5, 2.0)};
    at.wave = {cplx(uniform(-0.5, 0.5)), cplx(uniform(-0.5, 0.5))};
    return TestFunction{at};
  }

  std::pair<std::int64_t, std::int64_t> coprime_nonzero(std::int64_t bound) {
    for (;;) {
      const std::int64_t a = integer(-bound, bound), c = integer(-bound, bound);
      if (a != 0 && c != 0 && std::gcd(a, c) == 1) return {a, c};
    }
  }

 private:
  std::mt19937_64 rng_;
};

double rel_diff(cplx x, cplx y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

double param_diff(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }
double param_diff(cplx x, cplx y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

struct AtomDiff {
  double coeff = 0.0;
  double params = 0.0;
};

AtomDiff compare_atoms(const ModDist& x, const ModDist& y) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (x.atoms.size() != y.atoms.size()) return {kInf, kInf};
  AtomDiff out;
  for (std::size_t i = 0; i < x.atoms.size(); ++i) {
    if (x.atoms[i].index() != y.atoms[i].index()) return {kInf, kInf};
    if (const auto* dx = std::get_if<Dirac>(&x.atoms[i])) {
      const auto& dy = std::get<Dirac>(y.atoms[i]);
      out.coeff = std::max(out.coeff, rel_diff(dx->coeff, dy.coeff));
      out.params = std::max({out.params, param_diff(dx->point[0], dy.point[0]), param_diff(dx->point[1], dy.point[1])});
    } else {
      const auto& cx = std::get<ChirpWave>(x.atoms[i]);
      const auto& cy = std::get<ChirpWave>(y.atoms[i]);
      out.coeff = std::max(out.coeff, rel_diff(cx.coeff, cy.coeff));
      out.params = std::max({out.params, param_diff(cx.beta, cy.beta), param_diff(cx.wave[0], cy.wave[0]),
                             param_diff(cx.wave[1], cy.wave[1])});
    }
  }
  return out;
}

std::string tag(const char* prefix, long v) { return prefix + std::to_string(v); }

}  // namespace

VerificationReport verify_intertwine(const IntertwineConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-intertwine";
  rep.seed = cfg.seed;
  rep.param("samples", double(cfg.samples));
  rep.param("tol", cfg.tol);
  Sampler rng(cfg.seed);
  std::vector<double> worst(cfg.ms.size(), 0.0);
  for (int t = 0; t < cfg.samples; ++t) {
    double a = rng.uniform(-2, 2);
    if (std::abs(a) < 0.2) a = std::copysign(0.2 + std::abs(a), a);
    // every tenth element is lower triangular, which takes the b == 0 branch of decompose
    const double b = t % 10 == 0 ? 0.0 : rng.uniform(-2, 2);
    const double c = rng.uniform(-2, 2);
    const GroupElement g{a, b, c, (1.0 + b * c) / a};
    const TestFunction h = rng.atom(3);
    const cplx z{rng.uniform(-1, 1), rng.uniform(0.3, 2.0)};
    const std::size_t mi = static_cast<std::size_t>(t) % cfg.ms.size();
    worst[mi] = std::max(worst[mi], intertwine_residual(cfg.ms[mi], g, h, z));
  }
  for (std::size_t i = 0; i < cfg.ms.size(); ++i)
    rep.add(tag("m", cfg.ms[i]) + "/max_residual", worst[i], cfg.tol, worst[i] < cfg.tol);
  return rep;
}

VerificationReport verify_coset_forms(const CosetFormConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-lemma22";
  rep.param("bound", double(cfg.bound));
  rep.param("tol", cfg.tol);
  rep.param("param_tol", cfg.param_tol);
  for (std::int64_t M : cfg.Ms) {
    double coeff = 0.0, params = 0.0, edge = 0.0;
    std::size_t count = 0;
    for (const auto& pr : coprime_pairs(cfg.bound)) {
      const ModDist composed = ana_apply_dist(coset_element(pr.a, pr.c), psi(M));
      const ModDist closed = i_atom(pr.a, pr.c, M);
      const AtomDiff d = compare_atoms(composed, closed);
      coeff = std::max(coeff, d.coeff);
      params = std::max(params, d.params);
      if (pr.a == 0 || pr.c == 0) edge = std::max({edge, d.coeff, d.params});
      ++count;
    }
    const std::string id = tag("M", long(M));
    rep.add(id + "/pairs", std::to_string(count), "-", count > 0);
    rep.add(id + "/coeff", coeff, cfg.tol, coeff < cfg.tol);
    rep.add(id + "/phase_params", params, cfg.param_tol, params < cfg.param_tol);
    rep.add(id + "/edge_cosets", edge, cfg.tol, edge < cfg.tol);
  }
  return rep;
}

VerificationReport verify_transfer(const TransferConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-transfer";
  rep.seed = cfg.seed;
  rep.param("max_M", double(cfg.max_M));
  rep.param("samples", double(cfg.samples));
  rep.param("tol", cfg.tol);
  Sampler rng(cfg.seed);
  for (std::int64_t p : cfg.primes)
    for (int m : cfg.ms) {
      std::vector<std::pair<std::string, ModDist>> inputs;
      for (std::int64_t M = 1; M <= cfg.max_M; ++M) inputs.emplace_back(tag("psi", long(M)), psi(M));
      for (int k = 0; k < cfg.combos; ++k) {
        ModDist combo = rng.complex_unit() * psi(1);
        for (std::int64_t M = 2; M <= cfg.max_M; ++M) combo += rng.complex_unit() * psi(M);
        inputs.emplace_back(tag("combo", k), combo);
      }
      double worst = 0.0, worst_collapse = 0.0;
      for (const auto& [name, D] : inputs) {
        const ModDist image = tp_plane(p, m, D);
        auto F = [&](cplx w) { return theta_dist(m, D, w); };
        for (int s = 0; s < cfg.samples; ++s) {
          const cplx z{rng.uniform(-0.5, 0.5), rng.uniform(0.3, 1.3)};
          // for p not dividing M the s-sum cancels, so the scale is the sum of term sizes
          cplx lhs = std::pow(double(p), m) * F(double(p) * z);
          double scale = std::abs(lhs);
          for (std::int64_t t = 0; t < p; ++t) {
            const cplx term = F((z + double(t)) / double(p)) / double(p);
            lhs += term;
            scale += std::abs(term);
          }
          const double r = std::abs(lhs - theta_dist(m, image, z)) / scale;
          worst = std::max(worst, r);
          if (name.rfind("psi", 0) == 0 && std::stoll(name.substr(3)) % p == 0) worst_collapse = std::max(worst_collapse, r);
        }
      }
      const std::string id = tag("p", long(p)) + tag("/m", m);
      rep.add(id + "/max_residual", worst, cfg.tol, worst < cfg.tol);
      if (p <= cfg.max_M) rep.add(id + "/p_divides_M", worst_collapse, cfg.tol, worst_collapse < cfg.tol);
    }
  return rep;
}

VerificationReport verify_rotation_identity(const IdentityConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-identity-223";
  rep.seed = cfg.seed;
  rep.param("samples", double(cfg.samples));
  rep.param("M", double(cfg.M));
  rep.param("tol", cfg.tol);
  Sampler rng(cfg.seed);
  for (int j : cfg.js) {
    double b2 = 0.0, d2 = 0.0, rot = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      const auto [a, c] = rng.coprime_nonzero(12);
      const double q = rng.log_uniform(0.25, 4.0);
      const TestFunction h = rng.atom(2);
      const cplx main = pairing_iac(a, c, cfg.M, q, j, h, PairingRoute::Main);
      b2 = std::max(b2, rel_diff(main, pairing_iac(a, c, cfg.M, q, j, h, PairingRoute::B2)));
      d2 = std::max(d2, rel_diff(main, pairing_iac(a, c, cfg.M, q, j, h, PairingRoute::D2)));
      rot = std::max(rot, rel_diff(main, pairing_iac(a, c, cfg.M, q, j, h, PairingRoute::RotationMultiplier)));
    }
    const std::string id = tag("j", j);
    rep.add(id + "/b2", b2, cfg.tol, b2 < cfg.tol);
    rep.add(id + "/d2", d2, cfg.tol, d2 < cfg.tol);
    rep.add(id + "/rotation_multiplier", rot, cfg.tol, rot < cfg.tol);
  }
  return rep;
}

VerificationReport averaging_check(const AveragingConfig& cfg) {
  VerificationReport rep;
  rep.command = "averaging-check";
  rep.seed = cfg.seed;
  rep.param("r_max", double(cfg.r_max));
  rep.param("samples", double(cfg.samples));
  rep.param("tol", cfg.tol);
  Sampler rng(cfg.seed);
  for (std::int64_t p : cfg.primes)
    for (int r = 0; r <= cfg.r_max; ++r) {
      double worst = 0.0;
      for (int s = 0; s < cfg.samples; ++s) {
        double a = rng.uniform(-3, 3);
        if (std::abs(a) < 0.5) a = std::copysign(0.5 + std::abs(a), a);
        const double c = rng.uniform(-3, 3);
        const double q = rng.log_uniform(0.25, 4.0);
        worst = std::max(worst, averaging_residual(a, c, p, r, q, cfg.M, rng.atom(2)));
      }
      rep.add(tag("p", long(p)) + tag("/r", r), worst, cfg.tol, worst < cfg.tol);
    }
  return rep;
}

VerificationReport alpha_table_check(const AlphaConfig& cfg) {
  VerificationReport rep;
  rep.command = "alpha-table";
  rep.param("K", double(cfg.K));
  rep.param("brute_k", double(cfg.brute_k));
  const AlphaTable table(cfg.K);
  for (int k = 0; k <= cfg.K; ++k) {
    int bad_rows = 0;
    for (int ell = 0; ell <= k; ++ell) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(ell));
      if (table.row_sum(k, ell) != binom) ++bad_rows;
    }
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(k));
    const std::string id = tag("k", k);
    rep.add(id + "/row_sums", std::to_string(bad_rows) + " bad", "0 bad", bad_rows == 0);
    rep.add(id + "/support", table.support_ok(k) ? "ok" : "violated", "ok", table.support_ok(k));
    rep.add(id + "/mass", table.mass(k).get_str(), expected.get_str(), table.mass(k) == expected);
  }
  for (int k = 0; k <= std::min(cfg.brute_k, cfg.K); ++k) {
    NormalForm acc(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      HeckeWord w;
      for (int i = 0; i < k; ++i) {
        if ((mask >> i) & 1u) {
          w.symbols.push_back(Rpow{-1});
          w.symbols.push_back(Sigma{1});
        } else {
          w.symbols.push_back(Rpow{1});
        }
      }
      acc += rewrite(w);
    }
    const bool same = acc == table.row(k);
    rep.add(tag("brute_force/k", k), same ? "equal" : "differs", "equal", same);
  }
  return rep;
}

VerificationReport poincare_coeffs(const PoincareCoeffConfig& cfg) {
  VerificationReport rep;
  rep.command = "poincare-coeffs";
  rep.param("m", double(cfg.m));
  rep.param("M", double(cfg.M));
  rep.param("y", cfg.y);
  rep.param("cutoff", double(cfg.cutoff));
  rep.param("K", double(cfg.K));
  rep.param("tol", cfg.tol);
  const int weight = cfg.m + 1;
  if (dim_cusp(weight) != 1)
    throw DomainError("poincare_coeffs: weight " + std::to_string(weight) + " does not have a one-dimensional cusp space");
  int top = 1;
  for (int n : cfg.ns) top = std::max(top, n);
  const Eigenform f = eigenform(weight, std::max(top, 4));

  std::vector<int> ns{0, 1};
  for (int n : cfg.ns)
    if (n > 1) ns.push_back(n);
  const auto est = poincare_fourier(cfg.m, cfg.M, cfg.y, ns, cfg.cutoff, cfg.K, cfg.threads);
  const cplx b1 = est[1].value;
  const double cusp = std::abs(est[0].value) / std::abs(b1);
  rep.add("b0_over_b1", cusp, cfg.tol, cusp < cfg.tol);
  for (std::size_t i = 2; i < est.size(); ++i) {
    const int n = est[i].n;
    // the cusp space is one-dimensional, so the series is a multiple of f
    const double exact = f.coeff(n).approx() / f.coeff(1).approx();
    const cplx ratio = est[i].value / b1;
    const double err = std::abs(ratio - exact) / std::abs(exact);
    const std::string id = tag("b", n) + "_over_b1";
    rep.add(id, format_double(ratio.real()), format_double(exact), true);
    rep.entries.back().pass = err < cfg.tol;
    rep.add(id + "/rel_error", err, cfg.tol, err < cfg.tol);
    rep.add(id + "/truncation", est[i].truncation / std::abs(b1), std::numeric_limits<double>::infinity(), true);
    rep.add(id + "/aliasing", est[i].aliasing / std::abs(b1), std::numeric_limits<double>::infinity(), true);
  }
  return rep;
}

VerificationReport verify_ramanujan(const RamanujanConfig& cfg) {
  VerificationReport rep;
  rep.command = "ramanujan";
  rep.param("pmax", std::to_string(cfg.pmax));
  rep.param("eigen_pmax", std::to_string(cfg.eigen_pmax));
  rep.param("trunc", std::to_string(cfg.trunc));
  for (int w : cfg.weights) {
    const VerificationReport one = ramanujan_check(w, cfg.pmax, cfg.trunc);
    rep.entries.insert(rep.entries.end(), one.entries.begin(), one.entries.end());
    const auto forms = eigenforms(w, cfg.trunc);
    for (std::size_t idx = 0; idx < forms.size(); ++idx)
      for (long p : primes_up_to(cfg.eigen_pmax)) {
        std::string id = "w" + std::to_string(w);
        if (forms.size() > 1) id += "f" + std::to_string(idx);
        id += "/eigen_p" + std::to_string(p);
        const bool ok = forms[idx].satisfies_eigen_relation(p);
        rep.add(id, ok ? "exact" : "mismatch", "exact", ok);
      }
  }
  return rep;
}

}  // namespace rplane
