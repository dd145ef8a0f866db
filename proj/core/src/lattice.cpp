#include "rplane/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "rplane/errors.hpp"

namespace rplane {

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

std::int64_t mod_inverse(std::int64_t c, std::int64_t a) {
  if (a == 0) throw DomainError("mod_inverse: zero modulus");
  const std::int64_t n = std::llabs(a);
  const Bezout e = extended_gcd(c, n);
  if (e.g != 1) throw DomainError("mod_inverse: arguments not coprime");
  if (n == 1) return 0;
  std::int64_t x = e.x % n;
  if (x < 0) x += n;
  return x;
}

Completion complete_to_sl2(std::int64_t a, std::int64_t c) {
  // a x + c y = 1  ->  d = x, b = -y
  const Bezout e = extended_gcd(a, c);
  if (e.g != 1) throw DomainError("complete_to_sl2: pair not coprime");
  return {-e.y, e.x};
}

std::int64_t max_norm(const CoprimePair& pc) { return std::max(std::llabs(pc.a), std::llabs(pc.c)); }

std::vector<CoprimePair> coprime_pairs(std::int64_t bound) {
  std::vector<CoprimePair> out;
  if (bound < 1) return out;
  for (std::int64_t n = 1; n <= bound; ++n) {
    // boundary of the square of max-norm n, in (a, c) lexicographic order
    for (std::int64_t a = -n; a <= n; ++a) {
      const bool edge = std::llabs(a) == n;
      for (std::int64_t c = -n; c <= n; ++c) {
        if (!edge && std::llabs(c) != n) continue;
        if (std::gcd(a, c) == 1) out.push_back({a, c});
      }
    }
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

}  // namespace rplane
