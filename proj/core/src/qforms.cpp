#include "rplane/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "rplane/errors.hpp"
#include "rplane/lattice.hpp"

namespace rplane {

namespace {

mpz_class zpow(long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw UsageError("QSeries: empty coefficient");
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("QSeries: bad coefficient '" + s + "'");
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const auto frac = s.size() - dot - 1;
  mpz_class num;
  if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) throw UsageError("QSeries: bad coefficient '" + s + "'");
  mpq_class q(num, zpow(10, frac));
  q.canonicalize();
  return q;
}

void require_weight(int weight, const char* where) {
  if (weight < 0 || weight % 2 != 0) {
    std::ostringstream os;
    os << where << ": weight " << weight << " must be even and nonnegative";
    throw DomainError(os.str());
  }
}

}  // namespace

QSeries::QSeries(int weight, std::vector<mpq_class> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {}

QSeries QSeries::zero(int weight, int N) { return QSeries(weight, std::vector<mpq_class>(N + 1, 0)); }

const mpq_class& QSeries::operator[](int n) const {
  if (n < 0 || n > truncation()) {
    std::ostringstream os;
    os << "QSeries: coefficient " << n << " beyond truncation " << truncation();
    throw TruncationError(os.str());
  }
  return coeffs_[n];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

QSeries QSeries::truncated(int N) const {
  if (N > truncation()) throw TruncationError("QSeries::truncated: cannot extend a series");
  return QSeries(weight_, std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + N + 1));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const mpq_class& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int N = std::min(a.truncation(), b.truncation());
  std::vector<mpq_class> out(N + 1, 0);
  for (int i = 0; i <= N; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QSeries(a.weight_ + b.weight_, std::move(out));
}

bool operator==(const QSeries& a, const QSeries& b) { return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_; }

std::string QSeries::to_json() const {
  nlohmann::ordered_json j;
  j["weight"] = weight_;
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) j["coeffs"].push_back(c.get_str());
  return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<mpq_class> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(parse_rational(c.get<std::string>()));
    return QSeries(j.at("weight").get<int>(), std::move(cs));
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("QSeries::from_json: ") + ex.what());
  }
}

mpz_class divisor_power_sum(long n, int k) {
  mpz_class s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += zpow(d, k);
    if (d != n / d) s += zpow(n / d, k);
  }
  return s;
}

QSeries eisenstein(int k, int N) {
  if (k != 4 && k != 6) throw DomainError("eisenstein: only weights 4 and 6 are supported");
  if (N < 1) throw DomainError("eisenstein: N must be >= 1");
  const long scale = k == 4 ? 240 : -504;
  std::vector<mpq_class> cs(N + 1);
  cs[0] = 1;
  for (int n = 1; n <= N; ++n) cs[n] = mpq_class(divisor_power_sum(n, k - 1) * scale);
  return QSeries(k, std::move(cs));
}

QSeries delta(int N) {
  if (N < 1) throw DomainError("delta: N must be >= 1");
  const QSeries e4 = eisenstein(4, N);
  const QSeries e6 = eisenstein(6, N);
  return (e4 * e4 * e4 - e6 * e6) * mpq_class(1, 1728);
}

int dim_modular(int weight) {
  require_weight(weight, "dim_modular");
  if (weight == 0) return 1;
  if (weight == 2) return 0;
  return weight / 12 + (weight % 12 == 2 ? 0 : 1);
}

int dim_cusp(int weight) {
  require_weight(weight, "dim_cusp");
  return weight < 12 ? 0 : dim_modular(weight) - 1;
}

std::vector<QSeries> cusp_basis(int weight, int N) {
  if (weight < 12 || weight % 2 != 0) throw DomainError("cusp_basis: weight must be even and >= 12");
  std::vector<QSeries> out;
  const QSeries e4 = eisenstein(4, N);
  const QSeries e6 = eisenstein(6, N);
  const QSeries d = delta(N);
  QSeries dc = d;
  for (int c = 1; 12 * c <= weight; ++c, dc = dc * d) {
    const int rest = weight - 12 * c;
    if (rest == 2) continue;
    const int b = rest % 4 == 2 ? 1 : 0;
    const int a = (rest - 6 * b) / 4;
    QSeries f = dc;
    for (int i = 0; i < a; ++i) f = f * e4;
    if (b) f = f * e6;
    out.push_back(std::move(f));
  }
  return out;
}

QSeries hecke_q(long p, const QSeries& f, int out_trunc) {
  if (!is_prime(p)) throw DomainError("hecke_q: p must be prime");
  if (out_trunc < 0) throw DomainError("hecke_q: negative truncation");
  if (static_cast<long>(out_trunc) * p > f.truncation()) {
    std::ostringstream os;
    os << "hecke_q: output truncation " << out_trunc << " needs input truncation " << out_trunc * p << ", have "
       << f.truncation();
    throw TruncationError(os.str());
  }
  const mpz_class pw = zpow(p, static_cast<unsigned long>(f.weight() - 1));
  std::vector<mpq_class> out(out_trunc + 1);
  for (int n = 0; n <= out_trunc; ++n) {
    out[n] = f[static_cast<int>(n * p)];
    if (n % p == 0) out[n] += pw * f[static_cast<int>(n / p)];
  }
  return QSeries(f.weight(), std::move(out));
}

QSeries hecke_q(long p, const QSeries& f) {
  if (p < 2) throw DomainError("hecke_q: p must be prime");
  return hecke_q(p, f, static_cast<int>(f.truncation() / p));
}

int QuadNumber::sign() const {
  const int su = sgn(u);
  const int sv = (d == 0) ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su >= 0 && sv > 0) return 1;
  if (su <= 0 && sv < 0) return -1;
  const mpq_class lhs = u * u;
  const mpq_class rhs = v * v * d;
  const int c = cmp(lhs, rhs);
  return su > 0 ? c : -c;
}

double QuadNumber::approx() const { return u.get_d() + v.get_d() * std::sqrt(d.get_d()); }

std::string QuadNumber::str() const {
  if (v == 0 || d == 0) return u.get_str();
  return u.get_str() + (sgn(v) < 0 ? " - " : " + ") + mpq_class(abs(v)).get_str() + "*sqrt(" + d.get_str() + ")";
}

namespace {

mpz_class common_disc(const QuadNumber& x, const QuadNumber& y) {
  const bool xr = x.v == 0 || x.d == 0;
  const bool yr = y.v == 0 || y.d == 0;
  if (xr) return yr ? mpz_class(0) : y.d;
  if (yr) return x.d;
  if (x.d != y.d) throw DomainError("QuadNumber: mismatched quadratic fields");
  return x.d;
}

}  // namespace

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  const mpz_class d = common_disc(x, y);
  return {x.u * y.u + x.v * y.v * d, x.u * y.v + x.v * y.u, d};
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
  const mpz_class d = common_disc(x, y);
  return {x.u - y.u, x.v - y.v, d};
}

bool operator==(const QuadNumber& x, const QuadNumber& y) {
  const QuadNumber diff = x - y;
  return diff.u == 0 && diff.v == 0;
}

QuadNumber Eigenform::coeff(int n) const { return {rational[n], irrational[n], disc}; }

bool Eigenform::satisfies_eigen_relation(long p) const {
  const QSeries tr = hecke_q(p, rational);
  const QSeries ti = hecke_q(p, irrational);
  const QuadNumber lam = eigenvalue(p);
  for (int n = 0; n <= tr.truncation(); ++n) {
    if (!(QuadNumber{tr[n], ti[n], disc} == lam * coeff(n))) return false;
  }
  return true;
}

HeckeMatrix2 hecke_matrix(long p, int weight, int N) {
  const auto basis = cusp_basis(weight, N);
  if (basis.size() != 2) throw UnimplementedError("hecke_matrix: only two-dimensional cusp spaces are supported");
  const QSeries& f1 = basis[0];
  const QSeries& f2 = basis[1];
  if (f1[1] != 1 || f2[1] != 0 || f2[2] != 1) throw DomainError("hecke_matrix: basis is not in echelon form");
  HeckeMatrix2 m;
  auto solve = [&](const QSeries& img, mpq_class& c1, mpq_class& c2) {
    c1 = img[1];
    c2 = img[2] - c1 * f1[2];
  };
  solve(hecke_q(p, f1), m.a11, m.a21);
  solve(hecke_q(p, f2), m.a12, m.a22);
  return m;
}

std::vector<Eigenform> eigenforms(int weight, int N) {
  const auto basis = cusp_basis(weight, N);
  std::vector<Eigenform> out;
  if (basis.size() == 1) {
    const QSeries& f = basis[0];
    if (f[1] == 0) throw DomainError("eigenforms: basis element has b_1 = 0");
    out.push_back({weight, 0, f * mpq_class(1 / f[1]), QSeries::zero(weight, f.truncation())});
    return out;
  }
  if (basis.size() != 2) throw UnimplementedError("eigenforms: cusp space dimension must be 1 or 2");
  const HeckeMatrix2 m = hecke_matrix(2, weight, N);
  const mpq_class disc_q = m.discriminant();
  if (disc_q.get_den() != 1 || disc_q <= 0) throw UnimplementedError("eigenforms: expected a positive integer discriminant");
  const mpz_class disc = disc_q.get_num();
  if (mpz_perfect_square_p(disc.get_mpz_t())) throw UnimplementedError("eigenforms: rational eigenvalues not handled");
  // lambda = (tr +- sqrt(disc)) / 2; eigenform f1 + (lambda - b_2(f1)) f2
  for (int s : {1, -1}) {
    const mpq_class t_rat = m.trace() / 2 - basis[0][2];
    const mpq_class t_irr = mpq_class(s, 2);
    Eigenform e;
    e.weight = weight;
    e.disc = disc;
    e.rational = basis[0] + basis[1] * t_rat;
    e.irrational = basis[1] * t_irr;
    out.push_back(std::move(e));
  }
  return out;
}

Eigenform eigenform(int weight, int N) { return eigenforms(weight, N).front(); }

VerificationReport ramanujan_check(int weight, long pmax, int N) {
  VerificationReport rep;
  rep.command = "ramanujan";
  rep.param("weight", std::to_string(weight));
  rep.param("pmax", std::to_string(pmax));
  rep.param("trunc", std::to_string(N));
  if (pmax > N) throw TruncationError("ramanujan_check: truncation below pmax");
  const auto forms = eigenforms(weight, N);
  for (std::size_t idx = 0; idx < forms.size(); ++idx) {
    const auto& f = forms[idx];
    for (long p : primes_up_to(pmax)) {
      const QuadNumber b = f.eigenvalue(p);
      const QuadNumber sq = b * b;
      const mpz_class bound = 4 * zpow(p, static_cast<unsigned long>(weight - 1));
      const bool ok = (sq - QuadNumber{mpq_class(bound), 0, sq.d}).sign() <= 0;
      std::ostringstream id;
      id << "w" << weight;
      if (forms.size() > 1) id << "f" << idx;
      id << "/p" << p;
      rep.add(id.str(), sq.str(), bound.get_str(), ok);
    }
  }
  return rep;
}

}  // namespace rplane
