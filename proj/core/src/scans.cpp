#include "rplane/scans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rplane/errors.hpp"
#include "rplane/hecke_words.hpp"
#include "rplane/parallel.hpp"
#include "rplane/plane_rep.hpp"

namespace rplane {

namespace {

std::vector<CoprimePair> off_axis_pairs(std::int64_t cutoff) {
  std::vector<CoprimePair> out;
  for (const auto& pr : coprime_pairs(cutoff))
    if (pr.a != 0 && pr.c != 0) out.push_back(pr);
  return out;
}

// The dilated test function q^{1 - X} h.
TestFunction pull_back(double q, const TestFunction& h) { return anat_power(q, 1.0, -1, h); }

std::string fmt_q(double q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string to_string(PairingRoute route) {
  switch (route) {
    case PairingRoute::Main:
      return "main";
    case PairingRoute::B2:
      return "b2";
    case PairingRoute::D2:
      return "d2";
    case PairingRoute::RotationMultiplier:
      return "rotation-multiplier";
  }
  return "?";
}

double rising_factorial(double x, int j) {
  double out = 1.0;
  for (int i = 0; i < j; ++i) out *= x + i;
  return out;
}

Poly2 rotation_multiplier(double k, int j) {
  const CVec2 wave{cplx(k), cplx(0.0)};
  Poly2 q = Poly2::constant(1.0);
  for (int ell = 0; ell < j; ++ell) {
    Poly2 next = rotation_on_poly_wave(q, wave) * cplx(-1.0);
    next += q * cplx(double(ell));
    q = std::move(next);
  }
  return q;
}

cplx pairing_iac(std::int64_t a, std::int64_t c, std::int64_t M, double q, int j, const TestFunction& h,
                 PairingRoute route, DilationForm form) {
  if (j < 0) throw DomainError("pairing_iac: j must be >= 0");
  if (!(q > 0.0)) throw DomainError("pairing_iac: q must be positive");
  const ModDist dist = i_atom(a, c, M);
  auto dilated = [&](double qq, const TestFunction& g) {
    return form == DilationForm::PullBack ? anat_power(qq, 1.0, -1, g) : anat_power(qq, 0.0, 1, g);
  };
  const double root = std::sqrt(2.0 * double(M));
  switch (route) {
    case PairingRoute::Main:
      return pair(dist, dilated(q, rotation_polynomial(j, h)));
    case PairingRoute::B2: {
      if (a == 0) throw DomainError("pairing_iac: the B2 route needs a != 0");
      const Poly2 mult = poly_x2() * cplx(2.0 * kPi * root * q / double(a));
      TestFunction g = h;
      for (int i = 0; i < j; ++i) g = multiply_poly(g, mult);
      return pair(dist, dilated(q, g));
    }
    case PairingRoute::D2: {
      if (c == 0) throw DomainError("pairing_iac: the D2 route needs c != 0");
      const cplx scale = kI * root / (double(c) * q);
      TestFunction g = h;
      for (int i = 0; i < j; ++i) g = scale * partial_derivative(g, 1);
      return pair(dist, dilated(q, g));
    }
    case PairingRoute::RotationMultiplier: {
      if (a == 0) throw DomainError("pairing_iac: the rotation-multiplier route needs a != 0");
      const Poly2 mult = rotation_multiplier(root / double(a), j);
      return pair(dist, multiply_poly(dilated(q, h), mult));
    }
  }
  throw DomainError("pairing_iac: unknown route");
}

double bound_weight(std::int64_t a, std::int64_t c, double q, int j) {
  const double da = double(a), dc = double(c);
  const double base = 1.0 + da * da / (q * q) + q * q * dc * dc;
  return std::pow(da * da + dc * dc, -0.5) * std::pow(base, -0.5 * j);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(y[i] > 0.0) || !(x[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return 0.0;
  const double den = double(n) * sxx - sx * sx;
  if (den == 0.0) return 0.0;
  return (double(n) * sxy - sx * sy) / den;
}

ShellProfile bound_profile(int j, std::int64_t M, double q, const TestFunction& h, std::int64_t cutoff,
                           unsigned threads) {
  if (cutoff < 2) throw DomainError("bound_profile: cutoff must be >= 2");
  const auto pairs = off_axis_pairs(cutoff);
  const PreparedTest prep(pull_back(q, rotation_polynomial(j, h)));
  const auto ratios = parallel_map(pairs.size(), threads, [&](std::size_t i) {
    const auto& pr = pairs[i];
    const cplx v = prep.pair(i_atom(pr.a, pr.c, M));
    return cplx(std::abs(v) / bound_weight(pr.a, pr.c, q, j), 0.0);
  });

  ShellProfile prof;
  for (std::int64_t n = 1; n <= cutoff; ++n) prof.norms.push_back(n);
  prof.max_ratio.assign(prof.norms.size(), 0.0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double r = ratios[i].real();
    if (!std::isfinite(r)) prof.finite = false;
    auto& slot = prof.max_ratio[static_cast<std::size_t>(max_norm(pairs[i]) - 1)];
    slot = std::max(slot, r);
  }
  std::vector<double> tx, ty;
  for (std::size_t i = 0; i < prof.norms.size(); ++i) {
    prof.overall_max = std::max(prof.overall_max, prof.max_ratio[i]);
    if (2 * prof.norms[i] >= cutoff) {
      tx.push_back(double(prof.norms[i]));
      ty.push_back(prof.max_ratio[i]);
    }
  }
  prof.tail_slope = loglog_slope(tx, ty);
  return prof;
}

std::vector<NamedTest> bound_family() {
  std::vector<NamedTest> out;
  out.push_back({"gaussian", TestFunction::standard_gaussian()});
  GaussAtom chirped;
  chirped.zpar = cplx(0.5, 1.0);
  out.push_back({"chirped-gaussian", TestFunction{chirped}});
  GaussAtom poly;
  poly.poly = Poly2::constant(1.0) + poly_x1() + poly_x2() * poly_x2() + poly_x1() * poly_x2();
  out.push_back({"poly-gaussian", TestFunction{poly}});
  GaussAtom cubic;
  cubic.poly = holomorphic_power(3);
  out.push_back({"cubic-gaussian", TestFunction{cubic}});
  return out;
}

VerificationReport bound_scan(const BoundScanConfig& cfg, const std::vector<NamedTest>& family) {
  VerificationReport rep;
  rep.command = "bound-scan";
  rep.param("M", double(cfg.M));
  rep.param("cutoff", double(cfg.cutoff));
  rep.param("slope_tol", cfg.slope_tol);
  for (int j : cfg.js)
    for (double q : cfg.qs)
      for (const auto& t : family) {
        const ShellProfile prof = bound_profile(j, cfg.M, q, t.h, cfg.cutoff, cfg.threads);
        const std::string id = "j" + std::to_string(j) + "/q" + fmt_q(q) + "/" + t.name;
        rep.add(id + "/tail_slope", prof.tail_slope, cfg.slope_tol, prof.finite && prof.tail_slope <= cfg.slope_tol);
        rep.add(id + "/max_ratio", prof.overall_max, std::numeric_limits<double>::infinity(), prof.finite);
      }
  return rep;
}

double averaging_residual(double a, double c, std::int64_t p, int r, double q, std::int64_t M,
                          const TestFunction& h) {
  if (p < 2) throw DomainError("averaging_residual: p must be >= 2");
  if (r < 0) throw DomainError("averaging_residual: r must be >= 0");
  const TestFunction g = pull_back(q, h);
  const double pr = std::pow(double(p), r);
  const auto count = static_cast<std::int64_t>(std::llround(pr));

  TestFunction averaged;
  for (std::int64_t s = 0; s < count; ++s) averaged += multiply_chirp(g, double(s) / pr);
  averaged *= cplx(1.0 / pr);
  const cplx lhs = pair(i_atom_real(a, c, M), averaged);

  cplx rhs{};
  for (std::int64_t s = 0; s < count; ++s) rhs += pair(i_atom_real(a, c + double(s) * a / pr, M), g);
  rhs /= pr;

  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

cplx theta_psi(int m, std::int64_t M, cplx z) {
  return -kI * std::pow(2.0 * double(M), 0.5 * m) * std::exp(2.0 * kPi * kI * double(M) * z);
}

PoincareSeries::PoincareSeries(int m, std::int64_t M, std::int64_t cutoff) : m_(m), M_(M), cutoff_(cutoff) {
  if (m < 1) throw DomainError("PoincareSeries: m must be >= 1");
  if (M < 1) throw DomainError("PoincareSeries: M must be >= 1");
  if (cutoff < 1) throw DomainError("PoincareSeries: cutoff must be >= 1");
  const auto pairs = coprime_pairs(cutoff);
  cosets_.reserve(pairs.size());
  shell_end_.assign(static_cast<std::size_t>(cutoff) + 1, 0);
  for (const auto& pr : pairs) {
    const Completion bd = complete_to_sl2(pr.a, pr.c);
    cosets_.push_back({pr.a, pr.c, bd.b, bd.d});
    ++shell_end_[static_cast<std::size_t>(max_norm(pr))];
  }
  for (std::size_t n = 1; n < shell_end_.size(); ++n) shell_end_[n] += shell_end_[n - 1];
}

cplx PoincareSeries::summand(std::size_t idx, cplx z) const {
  const Coset& cs = cosets_.at(idx);
  // g = (b -a; d -c) acting as z -> (b z + d) / (-a z - c) with factor (-a z - c)^{-m-1}
  const cplx den = -double(cs.a) * z - double(cs.c);
  const cplx w = (double(cs.b) * z + double(cs.d)) / den;
  cplx inv = 1.0 / den;
  cplx factor = 1.0;
  for (int i = 0; i <= m_; ++i) factor *= inv;
  return factor * theta_psi(m_, M_, w);
}

cplx PoincareSeries::eval(cplx z, unsigned threads, std::int64_t bound) const {
  if (z.imag() <= 0.0) throw DomainError("PoincareSeries::eval: Im z must be positive");
  if (bound < 0 || bound > cutoff_) bound = cutoff_;
  const std::size_t n = shell_end_[static_cast<std::size_t>(bound)];
  const auto terms = parallel_map(n, threads, [&](std::size_t i) { return summand(i, z); });
  return pairwise_sum(terms);
}

cplx PoincareSeries::eval_via_distributions(cplx z, unsigned threads) const {
  if (z.imag() <= 0.0) throw DomainError("PoincareSeries::eval_via_distributions: Im z must be positive");
  const auto terms = parallel_map(cosets_.size(), threads, [&](std::size_t i) {
    const Coset& cs = cosets_[i];
    return theta_dist(m_, i_atom(cs.a, cs.c, M_), z);
  });
  return pairwise_sum(terms);
}

cplx poincare_eval(int m, std::int64_t M, cplx z, std::int64_t cutoff, unsigned threads) {
  return PoincareSeries(m, M, cutoff).eval(z, threads);
}

std::vector<FourierEstimate> poincare_fourier(int m, std::int64_t M, double y, const std::vector<int>& ns,
                                              std::int64_t cutoff, int K, unsigned threads) {
  if (K < 4 || (K & (K - 1)) != 0) throw DomainError("poincare_fourier: K must be a power of two >= 4");
  if (!(y > 0.0)) throw DomainError("poincare_fourier: y must be positive");
  const PoincareSeries series(m, M, cutoff);
  std::vector<cplx> full(static_cast<std::size_t>(K)), half(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    const cplx z(double(k) / K, y);
    full[static_cast<std::size_t>(k)] = series.eval(z, threads);
    half[static_cast<std::size_t>(k)] = series.eval(z, threads, cutoff / 2);
  }
  std::vector<FourierEstimate> out;
  for (int n : ns) {
    auto coefficient = [&](const std::vector<cplx>& vals, int step) {
      cplx acc{};
      int count = 0;
      for (int k = 0; k < K; k += step, ++count) {
        const cplx z(double(k) / K, y);
        acc += vals[static_cast<std::size_t>(k)] * std::exp(-2.0 * kPi * kI * double(n) * z);
      }
      return acc / double(count);
    };
    FourierEstimate est;
    est.n = n;
    est.value = coefficient(full, 1);
    est.truncation = std::abs(est.value - coefficient(half, 1));
    est.aliasing = std::abs(est.value - coefficient(full, 2));
    out.push_back(est);
  }
  return out;
}

TestFunction growth_default_test(int m) {
  GaussAtom atom;
  atom.poly = holomorphic_power(m);
  return TestFunction{atom};
}

std::vector<GrowthRow> growth_rows(const GrowthConfig& cfg, const TestFunction& h) {
  if (!is_prime(cfg.p)) throw DomainError("growth_scan: p must be prime");
  if (cfg.n_max < 0) throw DomainError("growth_scan: n_max must be >= 0");
  if (cfg.j < 0) throw DomainError("growth_scan: j must be >= 0");
  const AlphaTable table(2 * cfg.n_max);
  const auto pairs = coprime_pairs(cfg.cutoff);

  double work = 0.0;
  for (int ell = 0; ell <= 2 * cfg.n_max; ++ell)
    for (int r = 0; r <= ell; ++r)
      if (table.value(2 * cfg.n_max, ell, r) != 0) work += std::pow(double(cfg.p), r);
  work *= double(pairs.size());
  if (work > cfg.max_terms) {
    std::ostringstream os;
    os << "growth_scan: " << work << " pairings exceed the limit " << cfg.max_terms
       << "; lower --cutoff or the number of iterations";
    throw DomainError(os.str());
  }

  std::vector<GrowthRow> rows;
  for (int N = 0; N <= cfg.n_max; ++N) {
    const int k = 2 * N;
    cplx total{};
    for (int ell = 0; ell <= k; ++ell) {
      bool any = false;
      for (int r = 0; r <= ell; ++r) any = any || table.value(k, ell, r) != 0;
      if (!any) continue;
      const double q = std::pow(double(cfg.p), ell - N);
      const PreparedTest prep(rotation_polynomial(cfg.j, pull_back(q, h)));
      for (int r = 0; r <= ell; ++r) {
        const mpz_class alpha = table.value(k, ell, r);
        if (alpha == 0) continue;
        const auto terms = parallel_map(pairs.size(), cfg.threads, [&](std::size_t i) {
          return prep.pair(multiply_chirp_average(cfg.p, r, 0, i_atom(pairs[i].a, pairs[i].c, cfg.M)));
        });
        total += alpha.get_d() * pairwise_sum(terms);
      }
    }
    GrowthRow row;
    row.N = N;
    row.total = total;
    const mpz_class mass = table.mass(k);
    row.mass = mass.get_str();
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(k));
    row.mass_ok = mass == expected;
    for (double eps : cfg.eps)
      row.normalized.push_back(std::abs(total) / (std::pow(2.0, k) * std::pow(2.0 * double(cfg.p), N * eps)));
    rows.push_back(std::move(row));
  }
  return rows;
}

VerificationReport growth_scan(const GrowthConfig& cfg, const TestFunction& h) {
  VerificationReport rep;
  rep.command = "growth-scan";
  rep.param("p", double(cfg.p));
  rep.param("m", double(cfg.m));
  rep.param("M", double(cfg.M));
  rep.param("j", double(cfg.j));
  rep.param("n_max", double(cfg.n_max));
  rep.param("cutoff", double(cfg.cutoff));
  const auto rows = growth_rows(cfg, h);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string id = "N" + std::to_string(row.N);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(2 * row.N));
    rep.add(id + "/mass", row.mass, expected.get_str(), row.mass_ok);
    rep.add(id + "/abs_total", std::abs(row.total), std::numeric_limits<double>::infinity(),
            std::isfinite(std::abs(row.total)));
    for (std::size_t e = 0; e < cfg.eps.size(); ++e) {
      const double v = row.normalized[e];
      const double budget = i == 0 ? std::numeric_limits<double>::infinity() : 2.0 * rows[i - 1].normalized[e];
      rep.add(id + "/normalized_eps" + fmt_q(cfg.eps[e]), v, budget, std::isfinite(v) && v <= budget);
    }
  }
  return rep;
}

}  // namespace rplane
