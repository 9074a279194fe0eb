#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace scatter::nt {

using u64 = std::uint64_t;

inline bool is_prime(u64 v) {
  if (v < 2) return false;
  for (u64 d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Trial-division factorization, ascending primes.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 v) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (v > 1) out.emplace_back(v, 1U);
  return out;
}

/// base^exp, or nullopt when the result exceeds `limit`.
inline std::optional<u64> checked_pow(u64 base, u64 exp, u64 limit) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

inline u64 mulmod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % mod);
}

inline u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

/// Perfect prime power decomposition q = p^m, or nullopt.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

}  // namespace scatter::nt
