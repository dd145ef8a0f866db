#pragma once

// Pairings of I_{a,c} against dilated test functions, the identity and bound
// checks built on them, and the Poincare series lattice sums.

#include <cstdint>
#include <string>
#include <vector>

#include "rplane/distributions.hpp"
#include "rplane/lattice.hpp"
#include "rplane/report.hpp"

namespace rplane {

enum class PairingRoute {
  Main,                ///< P_j(2 i pi A) h built symbolically, then dilated
  B2,                  ///< B_2^j h with B_2 = 2 pi sqrt(2M) (q/a) x2
  D2,                  ///< D_2^j h with D_2 = 2 pi sqrt(2M) / (c q) * (-1/(2 i pi)) d/dx2
  RotationMultiplier,  ///< Q_j h where P_j(-2 i pi A) I_{a,c} = Q_j I_{a,c}
};

std::string to_string(PairingRoute route);

/// Which dilation the test function sees: q^{1 - 2 i pi A#} h = q h(x / q) or
/// q^{2 i pi A#} h = q h(q x).
enum class DilationForm { PullBack, Euler };

/// P_j(X) = X (X+1) ... (X+j-1).
double rising_factorial(double x, int j);

/// <I_{a,c}, q^{1 - 2 i pi A#} P_j(2 i pi A) h> evaluated by the given route.
/// B2 needs a != 0, D2 needs c != 0, RotationMultiplier needs a != 0; an
/// unavailable route throws DomainError.
cplx pairing_iac(std::int64_t a, std::int64_t c, std::int64_t M, double q, int j, const TestFunction& h,
                 PairingRoute route = PairingRoute::Main, DilationForm form = DilationForm::PullBack);

/// The polynomial Q_j with P_j(-2 i pi A) applied to a plane wave of frequency
/// (k, 0) times a radial factor equal to Q_j times the same.
Poly2 rotation_multiplier(double k, int j);

/// (a^2 + c^2)^{-1/2} (1 + a^2/q^2 + q^2 c^2)^{-j/2}
double bound_weight(std::int64_t a, std::int64_t c, double q, int j);

struct ShellProfile {
  std::vector<std::int64_t> norms;  ///< max-norm n of each shell
  std::vector<double> max_ratio;    ///< max of |pairing| / bound_weight over the shell
  double overall_max = 0.0;
  double tail_slope = 0.0;  ///< least-squares slope of log ratio vs log n on n in [B/2, B]
  bool finite = true;
};

/// Ratio profile over coprime (a, c), a c != 0, max-norm <= cutoff.
ShellProfile bound_profile(int j, std::int64_t M, double q, const TestFunction& h, std::int64_t cutoff,
                           unsigned threads);

/// Least-squares slope of log(y) against log(x), skipping y <= 0.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct NamedTest {
  std::string name;
  TestFunction h;
};

/// Gaussian, chirped Gaussian, polynomial x Gaussian, (x1 + i x2)^3 x Gaussian.
std::vector<NamedTest> bound_family();

struct BoundScanConfig {
  std::vector<int> js{0, 3};
  std::int64_t M = 1;
  std::vector<double> qs{0.25, 1.0, 4.0};
  std::int64_t cutoff = 200;
  double slope_tol = 0.25;
  unsigned threads = 1;
};

VerificationReport bound_scan(const BoundScanConfig& cfg, const std::vector<NamedTest>& family);

/// Relative residual of
///   <I0_{a,c}, sigma_r q^{1-2 i pi A#} h> = p^{-r} sum_s <I0_{a, c + s a / p^r}, q^{1-2 i pi A#} h>.
double averaging_residual(double a, double c, std::int64_t p, int r, double q, std::int64_t M, const TestFunction& h);

/// (theta_m psi_M)(z) = -i (2M)^{m/2} exp(2 i pi M z).
cplx theta_psi(int m, std::int64_t M, cplx z);

/// Truncated Poincare series: the coset sum of D_{m+1}((b -a; d -c)) theta_m psi_M
/// over coprime (a, c) of max-norm <= cutoff, in (max-norm, a, c) order.
class PoincareSeries {
 public:
  PoincareSeries(int m, std::int64_t M, std::int64_t cutoff);

  int m() const { return m_; }
  std::int64_t cutoff() const { return cutoff_; }
  std::size_t size() const { return cosets_.size(); }

  cplx summand(std::size_t idx, cplx z) const;
  /// Sum over the cosets of max-norm <= bound (bound <= cutoff).
  cplx eval(cplx z, unsigned threads, std::int64_t bound = -1) const;
  /// Same sum with each summand computed as theta_dist(m, i_atom(a, c, M), z).
  cplx eval_via_distributions(cplx z, unsigned threads) const;

 private:
  struct Coset {
    std::int64_t a, c, b, d;
  };
  int m_;
  std::int64_t M_;
  std::int64_t cutoff_;
  std::vector<Coset> cosets_;
  std::vector<std::size_t> shell_end_;  ///< shell_end_[n] = number of cosets with max-norm <= n
};

cplx poincare_eval(int m, std::int64_t M, cplx z, std::int64_t cutoff, unsigned threads = 1);

struct FourierEstimate {
  int n = 0;
  cplx value;
  double truncation = 0.0;  ///< |estimate at cutoff - estimate at cutoff/2|
  double aliasing = 0.0;    ///< |estimate from K samples - estimate from K/2 samples|
};

/// b_n of the Poincare series from K samples of x -> P(x + iy) e^{-2 pi i n (x + iy)}.
std::vector<FourierEstimate> poincare_fourier(int m, std::int64_t M, double y, const std::vector<int>& ns,
                                              std::int64_t cutoff, int K, unsigned threads = 1);

struct GrowthConfig {
  std::int64_t p = 2;
  int m = 11;
  std::int64_t M = 1;
  int j = 3;
  int n_max = 3;
  std::int64_t cutoff = 120;
  std::vector<double> eps{0.1, 0.5};
  unsigned threads = 1;
  /// Guard on cosets * p^{2N}.
  double max_terms = 2.0e8;
};

struct GrowthRow {
  int N = 0;
  cplx total;
  std::string mass;
  bool mass_ok = false;
  std::vector<double> normalized;  ///< |total| / (2^{2N} (2p)^{N eps}), one per eps
};

/// (x1 + i x2)^m exp(-pi |x|^2)
TestFunction growth_default_test(int m);

/// <(p^{-m/2} T_p)^{2N} S, h> for N = 0..n_max with S = sum over cosets of
/// P_j(-2 i pi A) I_{a,c}, via the normal form and the averaging decomposition.
std::vector<GrowthRow> growth_rows(const GrowthConfig& cfg, const TestFunction& h);
VerificationReport growth_scan(const GrowthConfig& cfg, const TestFunction& h);

}  // namespace rplane
