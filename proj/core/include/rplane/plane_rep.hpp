#pragma once

// The representation Ana of SL(2,R) on planar test functions, the Euclidean
// Fourier transform, the theta_m intertwiner and the half-plane action D_{m+1}.
//
// Matrix convention: g = (a b; c d), and D_{m+1}(g) f(z) = (bz+d)^{-m-1}
// f((az+c)/(bz+d)).  This is the transposed-looking action under which
// theta_m(Ana(g) h) = D_{m+1}(g) theta_m h holds on the nose.

#include <functional>
#include <variant>
#include <vector>

#include "rplane/gaussian.hpp"

namespace rplane {

struct GroupElement {
  double a = 1, b = 0, c = 0, d = 1;

  static GroupElement identity() { return {}; }
  double det() const { return a * d - b * c; }
  /// Throws DomainError if |det - 1| exceeds 1e-12 (scaled by the size of ad, bc).
  void validate() const;
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// (1 0; c 1): multiplication by exp(i pi c |x|^2).
struct LowerUnipotent {
  double c = 0;
  friend bool operator==(const LowerUnipotent&, const LowerUnipotent&) = default;
};
/// (0 1; -1 0): -i times the Fourier transform.
struct Inversion {
  friend bool operator==(const Inversion&, const Inversion&) = default;
};
/// (a 0; 0 1/a): h -> a^{-1} h(x / a).
struct Diagonal {
  double a = 1;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

using Generator = std::variant<LowerUnipotent, Inversion, Diagonal>;

/// Generators whose matrix product (left to right) is the represented element;
/// as operators they apply right to left.
using GeneratorWord = std::vector<Generator>;

GroupElement matrix_of(const Generator& gen);
GroupElement matrix_of(const GeneratorWord& word);

/// Bruhat-style factorization: b == 0 gives Diagonal(a) LowerUnipotent(ac);
/// otherwise Diagonal(b) LowerUnipotent(bd) Inversion LowerUnipotent(a/b).
/// Trivial factors are dropped, so the identity maps to the empty word.
GeneratorWord decompose(const GroupElement& g);

TestFunction fourier(const TestFunction& h);
TestFunction ana_apply(const Generator& gen, const TestFunction& h);
TestFunction ana_apply(const GroupElement& g, const TestFunction& h);

/// (theta_m h)(z) = integral of (x1 + i x2)^m exp(i pi z |x|^2) h(x) dx.
cplx theta(int m, const TestFunction& h, cplx z);

enum class Infinitesimal {
  Rotation,  ///< 2 i pi A  = -i (x1 d/dx2 - x2 d/dx1)
  Euler,     ///< 2 i pi A# = 1 + x1 d/dx1 + x2 d/dx2
};

TestFunction infinitesimal(Infinitesimal kind, const TestFunction& h);
/// Applies 2 i pi A to poly(x) exp(2 pi i <wave, x>) times any radial factor,
/// returning the new polynomial multiplier.
Poly2 rotation_on_poly_wave(const Poly2& poly, const CVec2& wave);
/// P_j(2 i pi A) h with P_j(X) = X (X+1) ... (X+j-1).
TestFunction rotation_polynomial(int j, const TestFunction& h);

/// q^{s + sigma 2 i pi A#} h = q^{s+sigma} h(q^sigma x), sigma = +1 or -1.
TestFunction anat_power(double q, double s, int sigma, const TestFunction& h);

using HalfPlaneFunction = std::function<cplx(cplx)>;

/// (bz+d)^{-mplus1} F((az+c)/(bz+d)).
cplx d_action(int mplus1, const GroupElement& g, const HalfPlaneFunction& f, cplx z);

/// |theta(m, Ana(g) h, z) - D_{m+1}(g) theta_m h (z)| relative to the larger side.
double intertwine_residual(int m, const GroupElement& g, const TestFunction& h, cplx z);

}  // namespace rplane
