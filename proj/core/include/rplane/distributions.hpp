#pragma once

// Distribution atoms (Dirac masses and chirped plane waves), the arithmetic
// distributions psi_M, phi_M, I_{a,c}, and the planar Hecke operator.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rplane/gaussian.hpp"
#include "rplane/plane_rep.hpp"

namespace rplane {

struct Dirac {
  cplx coeff{1.0};
  RVec2 point{};
};

/// coeff * exp(i pi beta |x|^2 + 2 pi i <wave, x>) with beta real.
struct ChirpWave {
  cplx coeff{1.0};
  double beta = 0.0;
  CVec2 wave{};
  std::string note;
};

using DistAtom = std::variant<Dirac, ChirpWave>;

/// Finite sum of atoms.  inv_level = lambda records invariance under the
/// chirp tau[lambda]; for lambda = p^j this is membership in Inv(p^j).
struct ModDist {
  std::vector<DistAtom> atoms;
  std::optional<mpq_class> inv_level;

  ModDist& operator+=(const ModDist& o);
  ModDist& operator*=(cplx s);
  friend ModDist operator+(ModDist a, const ModDist& b) { return a += b; }
  friend ModDist operator*(cplx s, ModDist a) { return a *= s; }

  /// True when every Dirac point satisfies lambda |x|^2 in 2Z (to 1e-9).
  bool satisfies_inv_level() const;
};

ModDist psi(std::int64_t M);
ModDist phi(std::int64_t M);

/// I_{a,c} = Ana((b -a; d -c)) psi_M, in closed form.
ModDist i_atom(std::int64_t a, std::int64_t c, std::int64_t M);
/// Closed form for a != 0 with real c and the unit factor exp(2 i pi M cbar / a) dropped.
ModDist i_atom_real(double a, double c, std::int64_t M);
/// The group element (b -a; d -c) completed from a coprime pair.
GroupElement coset_element(std::int64_t a, std::int64_t c);

ModDist fourier_dist(const ModDist& D);
ModDist ana_apply_dist(const Generator& gen, const ModDist& D);
ModDist ana_apply_dist(const GroupElement& g, const ModDist& D);

/// The distributional q^{s + sigma 2 i pi A#}: D(x) -> q^{s+sigma} D(q^sigma x).
/// The result pairs with h as D paired with q^{s - sigma 2 i pi A#} h.
ModDist transport_dilation(double q, double s, int sigma, const ModDist& D);
/// R^e with R = p^{-1/2 - i pi A#}; moves Inv(p^j) to Inv(p^{j-e}).
ModDist apply_r(std::int64_t p, int e, const ModDist& D);

/// S(p^r, x) = p^{-r} sum_{s mod p^r} exp(i pi s p^{ell-r} |x|^2).
cplx chirp_average_at(std::int64_t p, int r, int ell, const RVec2& x);

/// sigma_r^{(ell)} with the Inv(p^ell) requirement enforced: the input level
/// must be p^j with j <= ell.
ModDist sigma_apply(std::int64_t p, int r, int ell, const ModDist& D);
/// Same averaging without any level check.
ModDist multiply_chirp_average(std::int64_t p, int r, int ell, const ModDist& D);

/// p^{m/2} (R + R^{-1} sigma_1) D.  D must lie in Inv(1).
ModDist tp_plane(std::int64_t p, int m, const ModDist& D);

/// Test function pre-converted for repeated pairings against distributions.
class PreparedTest {
 public:
  explicit PreparedTest(const TestFunction& h);
  cplx pair(const DistAtom& atom) const;
  cplx pair(const ModDist& D) const;
  cplx pair_chirp(cplx coeff, double beta, const CVec2& wave) const;

 private:
  struct Item {
    cplx coeff;
    PolyUV poly;
    Poly2 cart;
    cplx zpar;
    CVec2 wave;
  };
  std::vector<Item> items_;
  TestFunction source_;
};

cplx pair(const ModDist& D, const TestFunction& h);
cplx theta_dist(int m, const ModDist& D, cplx z);

}  // namespace rplane
