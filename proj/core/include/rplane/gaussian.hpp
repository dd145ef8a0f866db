#pragma once

// Closed-form two-dimensional complex Gaussian integrals and the atom class
// (polynomial x complex Gaussian x plane wave) they act on.

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace rplane {

using cplx = std::complex<double>;
using CVec2 = std::array<cplx, 2>;
using RVec2 = std::array<double, 2>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI{0.0, 1.0};

/// Bivariate polynomial with complex coefficients, keyed by exponent pair.
/// The Tag only distinguishes the coordinate system the exponents refer to.
template <class Tag>
class BiPolynomial {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, cplx>;

  BiPolynomial() = default;

  static BiPolynomial constant(cplx c) { return monomial(0, 0, c); }
  static BiPolynomial monomial(int i, int j, cplx c = 1.0) {
    BiPolynomial p;
    p.add_term(i, j, c);
    return p;
  }

  void add_term(int i, int j, cplx c) {
    if (c == cplx{}) return;
    auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx{}) terms_.erase(it);
    }
  }

  cplx coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? cplx{} : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  cplx eval(cplx s, cplx t) const {
    cplx acc{};
    for (const auto& [k, c] : terms_) acc += c * ipow(s, k.first) * ipow(t, k.second);
    return acc;
  }

  /// Partial derivative in the first (var = 0) or second (var = 1) variable.
  BiPolynomial derivative(int var) const {
    BiPolynomial out;
    for (const auto& [k, c] : terms_) {
      const int e = var == 0 ? k.first : k.second;
      if (e == 0) continue;
      if (var == 0)
        out.add_term(k.first - 1, k.second, c * double(e));
      else
        out.add_term(k.first, k.second - 1, c * double(e));
    }
    return out;
  }

  /// p(l0 * s, l1 * t).
  BiPolynomial scaled(cplx l0, cplx l1) const {
    BiPolynomial out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c * ipow(l0, k.first) * ipow(l1, k.second));
    return out;
  }

  BiPolynomial& operator+=(const BiPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BiPolynomial& operator-=(const BiPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  BiPolynomial& operator*=(cplx s) {
    if (s == cplx{}) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  BiPolynomial& operator*=(const BiPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(BiPolynomial a, cplx s) { return a *= s; }
  friend BiPolynomial operator*(cplx s, BiPolynomial a) { return a *= s; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

  static cplx ipow(cplx base, int e) {
    cplx r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  }

 private:
  Terms terms_;
};

struct CartesianTag;
struct ComplexTag;

/// Polynomial in the Cartesian coordinates: sum c_ij x1^i x2^j.
using Poly2 = BiPolynomial<CartesianTag>;
/// Polynomial in u = x1 + i x2 and v = x1 - i x2: sum c_ab u^a v^b.
using PolyUV = BiPolynomial<ComplexTag>;

Poly2 poly_x1();
Poly2 poly_x2();
/// (x1 + i x2)^m
Poly2 holomorphic_power(int m);

PolyUV to_uv(const Poly2& p);
Poly2 from_uv(const PolyUV& p);

/// Evaluates a Cartesian polynomial at a real point.
cplx eval_at(const Poly2& p, const RVec2& x);

/// coeff * poly(x) * exp(i pi zpar |x|^2 + 2 pi i <wave, x>), with Im(zpar) > 0.
struct GaussAtom {
  cplx coeff{1.0};
  Poly2 poly = Poly2::constant(1.0);
  cplx zpar{0.0, 1.0};
  CVec2 wave{};

  /// Throws DomainError unless Im(zpar) > 0.
  void validate() const;
  cplx value(const RVec2& x) const;
};

/// Finite sum of atoms; the empty sum is the zero function.
class TestFunction {
 public:
  TestFunction() = default;
  explicit TestFunction(std::vector<GaussAtom> atoms);
  TestFunction(std::initializer_list<GaussAtom> atoms);

  /// exp(-pi |x|^2)
  static TestFunction standard_gaussian();

  const std::vector<GaussAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  cplx value(const RVec2& x) const;
  void validate() const;

  TestFunction& operator+=(const TestFunction& o);
  TestFunction& operator*=(cplx s);
  friend TestFunction operator+(TestFunction a, const TestFunction& b) { return a += b; }
  friend TestFunction operator-(TestFunction a, const TestFunction& b);
  friend TestFunction operator*(cplx s, TestFunction a) { return a *= s; }
  friend TestFunction operator*(TestFunction a, cplx s) { return a *= s; }

 private:
  std::vector<GaussAtom> atoms_;
};

TestFunction multiply_poly(const TestFunction& h, const Poly2& p);
/// h(x) exp(i pi beta |x|^2), beta real.
TestFunction multiply_chirp(const TestFunction& h, double beta);
/// h(x) exp(2 pi i <v, x>).
TestFunction multiply_wave(const TestFunction& h, const CVec2& v);
/// x -> h(s x), s real and nonzero.
TestFunction dilate(const TestFunction& h, double s);
/// Partial derivative d/dx1 (var = 0) or d/dx2 (var = 1).
TestFunction partial_derivative(const TestFunction& h, int var);
/// Pointwise product of two test functions.
TestFunction multiply(const TestFunction& f, const TestFunction& g);
/// Integral of h over the plane.
cplx integrate(const TestFunction& h);
/// Bilinear pairing <f, g> = integral of f g.
cplx pair(const TestFunction& f, const TestFunction& g);

/// Integral of exp(i pi zpar |x|^2 + 2 pi i <wave, x>) over R^2:
/// (-i zpar)^{-1} exp(-i pi (w1^2 + w2^2) / zpar).
cplx gauss_base(cplx zpar, const CVec2& wave);

/// Integral of poly(x) exp(i pi zpar |x|^2 + 2 pi i <wave, x>) over R^2.
cplx gauss_moment(const Poly2& poly, cplx zpar, const CVec2& wave);

/// Same integral with the polynomial given in the (u, v) basis.  Each factor
/// u (resp. v) is a Wirtinger derivative of the closed form in the wave
/// parameter, so the result is a finite sum per monomial.
cplx gauss_moment_uv(const PolyUV& poly, cplx zpar, const CVec2& wave);

}  // namespace rplane
