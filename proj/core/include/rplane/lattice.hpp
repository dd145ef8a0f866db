#pragma once

// Integer helpers for coset enumeration.

#include <cstdint>
#include <vector>

namespace rplane {

struct CoprimePair {
  std::int64_t a = 0;
  std::int64_t c = 0;
  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
};

/// Returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
struct Bezout {
  std::int64_t g, x, y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of c modulo |a| in [0, |a|); 0 when |a| = 1.  Throws DomainError
/// when gcd(a, c) != 1 or a = 0.
std::int64_t mod_inverse(std::int64_t c, std::int64_t a);

/// Integers (b, d) with a d - b c = 1.
struct Completion {
  std::int64_t b, d;
};
Completion complete_to_sl2(std::int64_t a, std::int64_t c);

/// All coprime (a, c) with max(|a|, |c|) <= bound, ordered by (max-norm, a, c).
std::vector<CoprimePair> coprime_pairs(std::int64_t bound);

std::int64_t max_norm(const CoprimePair& pc);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);

}  // namespace rplane
