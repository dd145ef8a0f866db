#include "rplane/hecke_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "rplane/errors.hpp"

namespace rplane {

std::string to_string(const WordSymbol& s) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rpow>)
          os << "R^" << x.e;
        else if constexpr (std::is_same_v<T, Sigma>)
          os << "s" << x.r;
        else if constexpr (std::is_same_v<T, SigmaSup>)
          os << "s" << x.r << "^(" << x.ell << ")";
        else
          os << "tau[" << x.beta.get_str() << "]";
      },
      s);
  return os.str();
}

std::string to_string(const HeckeWord& w) {
  if (w.symbols.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w.symbols[i]);
  }
  return out;
}

DomainTrace check_domain(const HeckeWord& w) {
  DomainTrace trace;
  int level = w.domain_in;
  for (std::size_t i = w.symbols.size(); i-- > 0;) {
    const auto& s = w.symbols[i];
    if (const auto* r = std::get_if<Rpow>(&s)) {
      if (r->e == 0) throw DomainError("check_domain: R^0 at position " + std::to_string(i));
      level -= r->e;
      continue;
    }
    int rr = 0, ell = 0;
    if (const auto* sg = std::get_if<Sigma>(&s)) {
      rr = sg->r;
    } else if (const auto* ss = std::get_if<SigmaSup>(&s)) {
      rr = ss->r;
      ell = ss->ell;
    } else {
      continue;  // tau preserves every Inv(p^j)
    }
    if (rr < 0 || ell < 0) throw DomainError("check_domain: negative index at position " + std::to_string(i));
    if (level > ell) {
      std::ostringstream os;
      os << "check_domain: symbol " << i << " (" << to_string(s) << ") applied to Inv(p^" << level
         << "), which is not contained in Inv(p^" << ell << ")";
      throw DomainError(os.str());
    }
    if (level < ell) trace.flagged.push_back(i);
    level = std::min(level, ell - rr);
  }
  trace.level_out = level;
  return trace;
}

void NormalForm::add(int e, int r, const mpz_class& c) {
  if (r < 0) throw DomainError("NormalForm::add: negative sigma index");
  auto& v = terms_[e];
  if (static_cast<int>(v.size()) <= r) v.resize(r + 1);
  v[r] += c;
  trim();
}

mpz_class NormalForm::coeff(int e, int r) const {
  auto it = terms_.find(e);
  if (it == terms_.end() || r < 0 || r >= static_cast<int>(it->second.size())) return 0;
  return it->second[r];
}

mpz_class NormalForm::mass() const {
  mpz_class m = 0;
  for (const auto& [e, v] : terms_)
    for (const auto& c : v) m += c;
  return m;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [e, v] : o.terms_)
    for (std::size_t r = 0; r < v.size(); ++r)
      if (v[r] != 0) add(e, static_cast<int>(r), v[r]);
  return *this;
}

void NormalForm::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    auto& v = it->second;
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty())
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool operator==(const NormalForm& x, const NormalForm& y) { return x.k_ == y.k_ && x.terms_ == y.terms_; }

std::ostream& operator<<(std::ostream& os, const NormalForm& nf) {
  bool first = true;
  for (auto it = nf.terms_.rbegin(); it != nf.terms_.rend(); ++it) {
    for (std::size_t r = 0; r < it->second.size(); ++r) {
      if (it->second[r] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << it->second[r] << "*R^" << it->first << "*s" << r;
    }
  }
  if (first) os << "0";
  return os;
}

namespace {

using Symbols = std::vector<WordSymbol>;

// sigma symbols with ell = 0 are kept in the plain form
WordSymbol canonical(const WordSymbol& s) {
  if (const auto* ss = std::get_if<SigmaSup>(&s); ss && ss->ell == 0) return Sigma{ss->r};
  return s;
}

std::optional<int> sigma_r(const WordSymbol& s) {
  if (const auto* sg = std::get_if<Sigma>(&s)) return sg->r;
  return std::nullopt;
}

std::optional<int> rpow(const WordSymbol& s) {
  if (const auto* r = std::get_if<Rpow>(&s)) return r->e;
  return std::nullopt;
}

mpq_class p_pow(long p, int e) {
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::abs(e)));
  if (e >= 0) return mpq_class(pw);
  mpq_class out(mpz_class(1), pw);
  out.canonicalize();
  return out;
}

// Replaces w[i, i+len) by repl.
void splice(Symbols& w, std::size_t i, std::size_t len, Symbols repl) {
  w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + len));
  w.insert(w.begin() + static_cast<long>(i), repl.begin(), repl.end());
}

bool step_at(Symbols& w, std::size_t i, long p) {
  const WordSymbol& s = w[i];
  const bool has1 = i + 1 < w.size();
  const bool has2 = i + 2 < w.size();

  if (auto e = rpow(s)) {
    if (*e == 0) {
      splice(w, i, 1, {});
      return true;
    }
    if (has1)
      if (auto e2 = rpow(w[i + 1])) {
        if (*e + *e2 == 0)
          splice(w, i, 2, {});
        else
          splice(w, i, 2, {Rpow{*e + *e2}});
        return true;
      }
    return false;
  }

  if (auto r = sigma_r(s)) {
    if (*r == 0) {
      splice(w, i, 1, {});
      return true;
    }
    if (!has1) return false;
    if (auto r2 = sigma_r(w[i + 1])) {
      splice(w, i, 2, {Sigma{std::max(*r, *r2)}});
      return true;
    }
    if (auto e = rpow(w[i + 1])) {
      if (*e > 0) {
        Symbols repl{Rpow{1}, Sigma{*r - 1}};
        if (*e > 1) repl.push_back(Rpow{*e - 1});
        splice(w, i, 2, std::move(repl));
        return true;
      }
      if (*e == -1 && has2)
        if (auto r3 = sigma_r(w[i + 2]); r3 && *r3 == 1) {
          splice(w, i, 3, {Rpow{-1}, Sigma{*r + 1}});
          return true;
        }
    }
    return false;
  }

  if (const auto* ss = std::get_if<SigmaSup>(&s)) {
    if (ss->r == 0) {
      splice(w, i, 1, {});
      return true;
    }
    if (has1)
      if (auto e = rpow(w[i + 1]); e && *e <= -ss->ell) {
        Symbols repl{Rpow{-ss->ell}, Sigma{ss->r}};
        if (*e < -ss->ell) repl.push_back(Rpow{*e + ss->ell});
        splice(w, i, 2, std::move(repl));
        return true;
      }
    return false;
  }

  const auto& t = std::get<Tau>(s);
  if (t.beta == 0) {
    splice(w, i, 1, {});
    return true;
  }
  if (!has1) return false;
  if (const auto* t2 = std::get_if<Tau>(&w[i + 1])) {
    splice(w, i, 2, {Tau{mpq_class(t.beta + t2->beta)}});
    return true;
  }
  if (auto e = rpow(w[i + 1])) {
    splice(w, i, 2, {Rpow{*e}, Tau{mpq_class(t.beta * p_pow(p, *e))}});
    return true;
  }
  return false;
}

}  // namespace

HeckeWord rewrite_word(const HeckeWord& word, long p) {
  check_domain(word);
  Symbols w;
  w.reserve(word.symbols.size());
  for (const auto& s : word.symbols) w.push_back(canonical(s));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (step_at(w, i, p)) {
        changed = true;
        break;
      }
    }
  }
  return HeckeWord{std::move(w), word.domain_in};
}

NormalForm rewrite(const HeckeWord& word, long p) {
  int k = 0;
  for (const auto& s : word.symbols)
    if (auto e = rpow(s)) k += std::abs(*e);
  const HeckeWord out = rewrite_word(word, p);
  const auto& w = out.symbols;
  int e = 0;
  int r = 0;
  std::size_t pos = 0;
  if (pos < w.size())
    if (auto x = rpow(w[pos])) {
      e = *x;
      ++pos;
    }
  if (pos < w.size())
    if (auto x = sigma_r(w[pos])) {
      r = *x;
      ++pos;
    }
  if (pos != w.size())
    throw DomainError("rewrite: '" + to_string(word) + "' reduces to '" + to_string(out) + "', not a normal form");
  NormalForm nf(k);
  nf.add(e, r, 1);
  return nf;
}

AlphaTable::AlphaTable(int K) {
  if (K < 0) throw DomainError("alpha_table: K must be >= 0");
  rows_.resize(static_cast<std::size_t>(K) + 1);
  rows_[0] = {{mpz_class(1)}};
  for (int k = 0; k < K; ++k) {
    auto& next = rows_[k + 1];
    next.resize(k + 2);
    for (int ell = 0; ell <= k + 1; ++ell) {
      next[ell].assign(ell + 1, 0);
      next[ell][0] = value(k, ell, 0) + value(k, ell, 1);
      for (int r = 1; r <= ell; ++r) next[ell][r] = value(k, ell, r + 1) + value(k, ell - 1, r - 1);
    }
  }
}

const mpz_class& AlphaTable::at(int k, int ell, int r) const {
  if (k < 0 || k > max_k() || ell < 0 || ell > k || r < 0 || r > ell) throw DomainError("AlphaTable::at: index out of range");
  return rows_[k][ell][r];
}

mpz_class AlphaTable::value(int k, int ell, int r) const {
  if (k < 0 || k > max_k() || ell < 0 || ell > k || r < 0 || r > ell) return 0;
  return rows_[k][ell][r];
}

mpz_class AlphaTable::row_sum(int k, int ell) const {
  mpz_class s = 0;
  for (int r = 0; r <= ell; ++r) s += value(k, ell, r);
  return s;
}

mpz_class AlphaTable::mass(int k) const {
  mpz_class s = 0;
  for (int ell = 0; ell <= k; ++ell) s += row_sum(k, ell);
  return s;
}

bool AlphaTable::support_ok(int k) const {
  for (int ell = 0; ell <= k; ++ell)
    for (int r = 0; r <= ell; ++r)
      if (value(k, ell, r) != 0 && 2 * ell - k - r > 0) return false;
  return true;
}

NormalForm AlphaTable::row(int k) const {
  NormalForm nf(k);
  for (int ell = 0; ell <= k; ++ell)
    for (int r = 0; r <= ell; ++r)
      if (value(k, ell, r) != 0) nf.add(k - 2 * ell, r, value(k, ell, r));
  return nf;
}

std::string AlphaTable::to_csv() const {
  std::ostringstream os;
  os << "k,l,r,alpha\n";
  for (int k = 0; k <= max_k(); ++k)
    for (int ell = 0; ell <= k; ++ell)
      for (int r = 0; r <= ell; ++r) os << k << ',' << ell << ',' << r << ',' << rows_[k][ell][r] << '\n';
  return os.str();
}

AlphaTable alpha_table(int K) { return AlphaTable(K); }

NormalForm expand_t_power(int k) { return AlphaTable(k).row(k); }

}  // namespace rplane
