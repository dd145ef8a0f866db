#pragma once

// Exact q-expansions of level-one modular forms.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rplane/report.hpp"

namespace rplane {

inline constexpr int kDefaultTruncation = 512;

/// b_0 + b_1 q + ... + b_N q^N with exact rational coefficients.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int weight, std::vector<mpq_class> coeffs);
  static QSeries zero(int weight, int N);

  int weight() const { return weight_; }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Throws TruncationError past the truncation order.
  const mpq_class& operator[](int n) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_cusp() const { return coeffs_.empty() || coeffs_[0] == 0; }
  QSeries truncated(int N) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const mpq_class& s);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const mpq_class& s) { return a *= s; }
  friend QSeries operator*(const mpq_class& s, QSeries a) { return a *= s; }
  /// Cauchy product; weights add, truncation is the smaller one.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b);

  /// {"weight": w, "coeffs": ["b0", "b1", ...]} with integers in decimal and
  /// other rationals as "num/den".
  std::string to_json() const;
  /// Accepts integer, "num/den" or finite decimal ("12.5") coefficient strings.
  static QSeries from_json(const std::string& text);

 private:
  int weight_ = 0;
  std::vector<mpq_class> coeffs_;
};

mpz_class divisor_power_sum(long n, int k);

QSeries eisenstein(int k, int N = kDefaultTruncation);
QSeries delta(int N = kDefaultTruncation);

int dim_modular(int weight);
int dim_cusp(int weight);

/// E4^a E6^b Delta^c, 4a + 6b + 12c = weight, c = 1, 2, ...; length dim S_weight.
std::vector<QSeries> cusp_basis(int weight, int N = kDefaultTruncation);

/// b_n(T_p f) = b_{np} + p^{weight-1} b_{n/p}, n <= out_trunc.
QSeries hecke_q(long p, const QSeries& f, int out_trunc);
/// Output truncation floor(N / p).
QSeries hecke_q(long p, const QSeries& f);

/// u + v sqrt(d), d a positive non-square integer (or v = 0).
struct QuadNumber {
  mpq_class u = 0;
  mpq_class v = 0;
  mpz_class d = 0;

  /// Exact sign: -1, 0 or +1.
  int sign() const;
  double approx() const;
  std::string str() const;
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
  friend bool operator==(const QuadNumber& x, const QuadNumber& y);
};

/// Normalized Hecke eigenform with b_n = rational[n] + irrational[n] sqrt(disc).
struct Eigenform {
  int weight = 0;
  mpz_class disc = 0;
  QSeries rational;
  QSeries irrational;

  QuadNumber coeff(int n) const;
  QuadNumber eigenvalue(long p) const { return coeff(static_cast<int>(p)); }
  int truncation() const { return rational.truncation(); }
  /// T_p f = b_p f coefficient-wise up to floor(N/p).
  bool satisfies_eigen_relation(long p) const;
};

struct HeckeMatrix2 {
  mpq_class a11, a12, a21, a22;  ///< T_2 f_j = a_1j f_1 + a_2j f_2
  mpq_class trace() const { return a11 + a22; }
  mpq_class det() const { return a11 * a22 - a12 * a21; }
  mpq_class discriminant() const { return trace() * trace() - 4 * det(); }
};

/// Matrix of T_p on the two-element cusp basis (weight 24).
HeckeMatrix2 hecke_matrix(long p, int weight, int N = kDefaultTruncation);

/// All normalized eigenforms of the weight; dim S must be 1 or 2.
std::vector<Eigenform> eigenforms(int weight, int N = kDefaultTruncation);
/// The first eigenform (the only one when dim S = 1).
Eigenform eigenform(int weight, int N = kDefaultTruncation);

/// Exact check b_p^2 <= 4 p^{weight-1} for every prime p <= pmax, for every
/// eigenform of the weight.
VerificationReport ramanujan_check(int weight, long pmax, int N = kDefaultTruncation);

}  // namespace rplane
