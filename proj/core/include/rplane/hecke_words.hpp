#pragma once

// Words in R^e, sigma_r, sigma_r^(ell) and tau[beta], their domain chains
// through the spaces Inv(p^j), and the normal form of powers of R + R^-1 sigma_1.
//
// Words apply right to left: symbols[0] is the outermost operator.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace rplane {

struct Rpow {
  int e = 1;
  friend bool operator==(const Rpow&, const Rpow&) = default;
};
struct Sigma {
  int r = 0;
  friend bool operator==(const Sigma&, const Sigma&) = default;
};
struct SigmaSup {
  int r = 0;
  int ell = 0;
  friend bool operator==(const SigmaSup&, const SigmaSup&) = default;
};
struct Tau {
  mpq_class beta;
  friend bool operator==(const Tau& x, const Tau& y) { return x.beta == y.beta; }
};

using WordSymbol = std::variant<Rpow, Sigma, SigmaSup, Tau>;

std::string to_string(const WordSymbol& s);

struct HeckeWord {
  std::vector<WordSymbol> symbols;
  int domain_in = 0;  ///< the word acts on Inv(p^domain_in)

  friend bool operator==(const HeckeWord&, const HeckeWord&) = default;
};

std::string to_string(const HeckeWord& w);

struct DomainTrace {
  int level_out = 0;
  /// Symbol positions of sigma^(ell) applied to Inv(p^j) with j < ell; valid
  /// because Inv(p^j) is contained in Inv(p^ell), but not literally on the
  /// space the operator was defined on.
  std::vector<std::size_t> flagged;
};

/// Scans right to left.  Throws DomainError naming the position of the first
/// sigma^(ell) applied to Inv(p^j) with j > ell.
DomainTrace check_domain(const HeckeWord& w);

/// Sum over e of R^e (sum over r of coefficient * sigma_r).
class NormalForm {
 public:
  NormalForm() = default;
  explicit NormalForm(int k) : k_(k) {}

  int k() const { return k_; }
  void set_k(int k) { k_ = k; }
  void add(int e, int r, const mpz_class& coeff);
  mpz_class coeff(int e, int r) const;
  /// alpha_{k,ell}^{(r)}, the coefficient of R^{k - 2 ell} sigma_r.
  mpz_class alpha(int ell, int r) const { return coeff(k_ - 2 * ell, r); }
  const std::map<int, std::vector<mpz_class>>& terms() const { return terms_; }
  mpz_class mass() const;

  NormalForm& operator+=(const NormalForm& o);
  friend bool operator==(const NormalForm& x, const NormalForm& y);
  friend std::ostream& operator<<(std::ostream& os, const NormalForm& nf);

 private:
  void trim();
  int k_ = 0;
  std::map<int, std::vector<mpz_class>> terms_;
};

/// Rewrites a single word (valid on its domain) into normal form using
///   R^a R^b -> R^{a+b},  sigma_0 -> 1,  sigma_r sigma_s -> sigma_max(r,s),
///   sigma_r R -> R sigma_{r-1},  sigma_r R^-1 sigma_1 -> R^-1 sigma_{r+1},
///   sigma_r^(ell) R^-ell -> R^-ell sigma_r,  tau[b] R^e -> R^e tau[p^e b],
///   tau[b] tau[c] -> tau[b+c],  tau[0] -> 1,
/// always at the leftmost applicable position.  p is needed only for tau.
NormalForm rewrite(const HeckeWord& w, long p = 2);

/// Terminal word reached by the rewriting system.
HeckeWord rewrite_word(const HeckeWord& w, long p = 2);

/// alpha_{k,ell}^{(r)} for 0 <= r <= ell <= k <= K.
class AlphaTable {
 public:
  explicit AlphaTable(int K);

  int max_k() const { return static_cast<int>(rows_.size()) - 1; }
  const mpz_class& at(int k, int ell, int r) const;
  mpz_class value(int k, int ell, int r) const;  ///< 0 outside the triangle
  mpz_class row_sum(int k, int ell) const;
  mpz_class mass(int k) const;
  /// Every nonzero alpha has 2 ell - k - r <= 0.
  bool support_ok(int k) const;
  NormalForm row(int k) const;
  /// Header "k,l,r,alpha", one line per entry in (k, l, r) order.
  std::string to_csv() const;

 private:
  std::vector<std::vector<std::vector<mpz_class>>> rows_;
};

AlphaTable alpha_table(int K);
NormalForm expand_t_power(int k);

}  // namespace rplane
