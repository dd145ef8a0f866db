#include "rplane/gaussian.hpp"

#include <cmath>
#include <sstream>

#include "rplane/errors.hpp"

namespace rplane {

namespace {

void require_upper(cplx zpar, const char* where) {
  if (!(zpar.imag() > 0.0)) {
    std::ostringstream os;
    os << where << ": Im(zpar) must be > 0, got " << zpar;
    throw DomainError(os.str());
  }
}

// Binomial coefficients as doubles; degrees here stay far below overflow.
double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= double(n - i);
  return r;
}

// (s + t)^n as a list of coefficients of s^k t^(n-k), k = 0..n.
template <class P>
P binomial_power(cplx s0, int si, int sj, cplx t0, int ti, int tj, int n) {
  // (s0 * X^si Y^sj + t0 * X^ti Y^tj)^n
  P out;
  for (int k = 0; k <= n; ++k) {
    const cplx c = binom(n, k) * P::ipow(s0, k) * P::ipow(t0, n - k);
    out.add_term(si * k + ti * (n - k), sj * k + tj * (n - k), c);
  }
  return out;
}

}  // namespace

Poly2 poly_x1() { return Poly2::monomial(1, 0); }
Poly2 poly_x2() { return Poly2::monomial(0, 1); }

Poly2 holomorphic_power(int m) {
  if (m < 0) throw DomainError("holomorphic_power: negative exponent");
  return from_uv(PolyUV::monomial(m, 0));
}

PolyUV to_uv(const Poly2& p) {
  // x1 = (u + v) / 2, x2 = (u - v) / (2i)
  PolyUV out;
  for (const auto& [k, c] : p.terms()) {
    const auto a = binomial_power<PolyUV>(0.5, 1, 0, 0.5, 0, 1, k.first);
    const auto b = binomial_power<PolyUV>(1.0 / (2.0 * kI), 1, 0, -1.0 / (2.0 * kI), 0, 1, k.second);
    out += (a * b) * c;
  }
  return out;
}

Poly2 from_uv(const PolyUV& p) {
  // u = x1 + i x2, v = x1 - i x2
  Poly2 out;
  for (const auto& [k, c] : p.terms()) {
    const auto a = binomial_power<Poly2>(1.0, 1, 0, kI, 0, 1, k.first);
    const auto b = binomial_power<Poly2>(1.0, 1, 0, -kI, 0, 1, k.second);
    out += (a * b) * c;
  }
  return out;
}

cplx eval_at(const Poly2& p, const RVec2& x) { return p.eval(x[0], x[1]); }

void GaussAtom::validate() const { require_upper(zpar, "GaussAtom"); }

cplx GaussAtom::value(const RVec2& x) const {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  const cplx phase = kI * kPi * zpar * r2 + 2.0 * kPi * kI * (wave[0] * x[0] + wave[1] * x[1]);
  return coeff * eval_at(poly, x) * std::exp(phase);
}

TestFunction::TestFunction(std::vector<GaussAtom> atoms) : atoms_(std::move(atoms)) { validate(); }
TestFunction::TestFunction(std::initializer_list<GaussAtom> atoms) : atoms_(atoms) { validate(); }

TestFunction TestFunction::standard_gaussian() { return TestFunction{GaussAtom{}}; }

cplx TestFunction::value(const RVec2& x) const {
  cplx acc{};
  for (const auto& a : atoms_) acc += a.value(x);
  return acc;
}

void TestFunction::validate() const {
  for (const auto& a : atoms_) a.validate();
}

TestFunction& TestFunction::operator+=(const TestFunction& o) {
  atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
  return *this;
}

TestFunction& TestFunction::operator*=(cplx s) {
  for (auto& a : atoms_) a.coeff *= s;
  return *this;
}

TestFunction operator-(TestFunction a, const TestFunction& b) { return a += (-1.0) * b; }

TestFunction multiply_poly(const TestFunction& h, const Poly2& p) {
  std::vector<GaussAtom> out;
  out.reserve(h.atoms().size());
  for (auto a : h.atoms()) {
    a.poly = a.poly * p;
    out.push_back(std::move(a));
  }
  return TestFunction(std::move(out));
}

TestFunction multiply_chirp(const TestFunction& h, double beta) {
  std::vector<GaussAtom> out(h.atoms());
  for (auto& a : out) a.zpar += beta;
  return TestFunction(std::move(out));
}

TestFunction multiply_wave(const TestFunction& h, const CVec2& v) {
  std::vector<GaussAtom> out(h.atoms());
  for (auto& a : out) {
    a.wave[0] += v[0];
    a.wave[1] += v[1];
  }
  return TestFunction(std::move(out));
}

TestFunction dilate(const TestFunction& h, double s) {
  if (s == 0.0) throw DomainError("dilate: zero scale");
  std::vector<GaussAtom> out(h.atoms());
  for (auto& a : out) {
    a.poly = a.poly.scaled(s, s);
    a.zpar *= s * s;
    a.wave[0] *= s;
    a.wave[1] *= s;
  }
  return TestFunction(std::move(out));
}

TestFunction partial_derivative(const TestFunction& h, int var) {
  if (var != 0 && var != 1) throw DomainError("partial_derivative: var must be 0 or 1");
  std::vector<GaussAtom> out(h.atoms());
  const Poly2 xk = var == 0 ? poly_x1() : poly_x2();
  for (auto& a : out) {
    const Poly2 phase = xk * (2.0 * kPi * kI * a.zpar) + Poly2::constant(2.0 * kPi * kI * a.wave[var]);
    a.poly = a.poly.derivative(var) + a.poly * phase;
  }
  return TestFunction(std::move(out));
}

TestFunction multiply(const TestFunction& f, const TestFunction& g) {
  std::vector<GaussAtom> out;
  out.reserve(f.atoms().size() * g.atoms().size());
  for (const auto& a : f.atoms())
    for (const auto& b : g.atoms())
      out.push_back(GaussAtom{a.coeff * b.coeff, a.poly * b.poly, a.zpar + b.zpar,
                              CVec2{a.wave[0] + b.wave[0], a.wave[1] + b.wave[1]}});
  return TestFunction(std::move(out));
}

cplx integrate(const TestFunction& h) {
  cplx acc{};
  for (const auto& a : h.atoms()) acc += a.coeff * gauss_moment(a.poly, a.zpar, a.wave);
  return acc;
}

cplx pair(const TestFunction& f, const TestFunction& g) { return integrate(multiply(f, g)); }

cplx gauss_base(cplx zpar, const CVec2& wave) {
  require_upper(zpar, "gauss_base");
  const cplx w2 = wave[0] * wave[0] + wave[1] * wave[1];
  return std::exp(-kI * kPi * w2 / zpar) / (-kI * zpar);
}

cplx gauss_moment(const Poly2& poly, cplx zpar, const CVec2& wave) {
  require_upper(zpar, "gauss_moment");
  return gauss_moment_uv(to_uv(poly), zpar, wave);
}

cplx gauss_moment_uv(const PolyUV& poly, cplx zpar, const CVec2& wave) {
  require_upper(zpar, "gauss_moment");
  if (poly.is_zero()) return 0.0;
  // F(W, Wb) = (-i z)^{-1} exp(kappa W Wb), W = w1 + i w2, Wb = w1 - i w2,
  // kappa = -i pi / z.  Multiplying the integrand by u (v) is (pi i)^{-1}
  // d/dWb (d/dW) applied to F.
  const cplx kappa = -kI * kPi / zpar;
  const cplx W = wave[0] + kI * wave[1];
  const cplx Wb = wave[0] - kI * wave[1];
  const cplx base = std::exp(kappa * W * Wb) / (-kI * zpar);
  const cplx inv_pi_i = 1.0 / (kPi * kI);
  cplx acc{};
  for (const auto& [k, c] : poly.terms()) {
    const int a = k.first;
    const int b = k.second;
    cplx sum{};
    for (int t = 0; t <= std::min(a, b); ++t)
      sum += binom(a, t) * falling(b, t) * PolyUV::ipow(Wb, b - t) * PolyUV::ipow(kappa * W, a - t);
    acc += c * sum * PolyUV::ipow(kappa, b) * PolyUV::ipow(inv_pi_i, a + b);
  }
  return acc * base;
}

}  // namespace rplane
