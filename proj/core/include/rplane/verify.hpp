#pragma once

// Seeded batch checks.  Each returns a VerificationReport whose entries carry
// the worst residual of a family of comparisons against its tolerance.

#include <cstdint>
#include <vector>

#include "rplane/report.hpp"

namespace rplane {

struct IntertwineConfig {
  int samples = 200;
  std::vector<int> ms{11, 13};
  double tol = 1e-9;
  std::uint64_t seed = 1;
};
/// theta_m(Ana(g) h) against D_{m+1}(g) theta_m h on random (g, h, z).
VerificationReport verify_intertwine(const IntertwineConfig& cfg);

struct CosetFormConfig {
  std::int64_t bound = 20;
  std::vector<std::int64_t> Ms{1, 2, 3};
  double tol = 1e-10;
  /// Phase parameters (chirp, wave, Dirac point) are compared to this.
  double param_tol = 1e-12;
};
/// Generator-by-generator Ana((b -a; d -c)) psi_M against the closed forms of
/// i_atom, for every coprime pair with |a|, |c| <= bound.
VerificationReport verify_coset_forms(const CosetFormConfig& cfg);

struct TransferConfig {
  std::vector<std::int64_t> primes{2, 3};
  std::vector<int> ms{11, 13};
  std::int64_t max_M = 6;
  int samples = 10;
  int combos = 4;  ///< random combinations per (p, m), besides each single psi_M
  double tol = 1e-8;
  std::uint64_t seed = 1;
};
/// T_p applied to theta_m of combinations of psi_M against theta_m of the
/// planar operator applied first.
VerificationReport verify_transfer(const TransferConfig& cfg);

struct IdentityConfig {
  std::vector<int> js{1, 2, 3};
  int samples = 50;
  std::int64_t M = 1;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};
/// Main pairing route against the B2, D2 and rotation-multiplier routes.
VerificationReport verify_rotation_identity(const IdentityConfig& cfg);

struct AveragingConfig {
  std::vector<std::int64_t> primes{2, 3};
  int r_max = 3;
  int samples = 20;
  std::int64_t M = 1;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};
VerificationReport averaging_check(const AveragingConfig& cfg);

struct AlphaConfig {
  int K = 24;
  int brute_k = 10;  ///< words of length <= brute_k are rewritten one by one
};
/// Row sums, support, mass, and the brute-force rewriting oracle.
VerificationReport alpha_table_check(const AlphaConfig& cfg);

struct PoincareCoeffConfig {
  int m = 11;
  std::int64_t M = 1;
  double y = 1.0;
  std::int64_t cutoff = 200;
  int K = 64;
  std::vector<int> ns{2, 3};
  double tol = 1e-3;
  unsigned threads = 1;
};
/// b_n / b_1 of the numerical Poincare series against the exact eigenform of
/// weight m + 1 (which must have a one-dimensional cusp space).
VerificationReport poincare_coeffs(const PoincareCoeffConfig& cfg);

struct RamanujanConfig {
  std::vector<int> weights{12, 16, 18, 20, 22, 26};
  long pmax = 97;
  long eigen_pmax = 19;  ///< T_p f = b_p f is checked for primes up to here
  int trunc = 512;
};
/// ramanujan_check for each weight plus the exact eigen-relation entries.
VerificationReport verify_ramanujan(const RamanujanConfig& cfg);

}  // namespace rplane
