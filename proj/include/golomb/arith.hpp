#pragma once

// Exact elementary number theory on 64-bit naturals. Products and powers are
// widened to 128 bits and overflow is reported, never wrapped.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golomb/errors.hpp"

namespace golomb {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kMaxU64 = ~u64{0};
inline constexpr i64 kMaxI64 = static_cast<i64>(kMaxU64 >> 1);

/// Largest argument accepted by primes_up_to (the sieve is materialized).
inline constexpr u64 kMaxSieve = 2'000'000'000ULL;

// --- checked arithmetic ----------------------------------------------------

inline u64 checked_add(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition exceeds 64 bits");
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("product exceeds 64 bits");
  return r;
}

inline u64 checked_pow(u64 base, u64 exponent) {
  u64 result = 1;
  for (u64 i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

/// Narrows a 128-bit intermediate back to i64 or throws.
inline i64 narrow_i64(i128 v) {
  if (v > static_cast<i128>(kMaxI64) || v < -static_cast<i128>(kMaxI64)) {
    throw OverflowError("value exceeds 63 bits");
  }
  return static_cast<i64>(v);
}

/// Canonical residue of v modulo m, in [0, m).
inline u64 mod_floor(i128 v, u64 m) {
  i128 r = v % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

inline bool divides(u64 d, i128 v) { return d != 0 && v % static_cast<i128>(d) == 0; }

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exponent, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

inline u64 gcd(u64 x, u64 y) { return std::gcd(x, y); }

inline u64 lcm(u64 x, u64 y) {
  if (x == 0 || y == 0) return 0;
  return checked_mul(x / gcd(x, y), y);
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<u64> mod_inverse(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

// --- primes and factorization ---------------------------------------------

/// Deterministic trial division.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (u64 d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

struct PrimePower {
  u64 prime;
  u64 exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. The factorization of 1 is empty.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<PrimePower>& pairs() const& { return pairs_; }
  std::vector<PrimePower> pairs() && { return std::move(pairs_); }

  /// The set of prime divisors, ascending.
  std::vector<u64> primes() const {
    std::vector<u64> out;
    out.reserve(pairs_.size());
    for (const auto& pp : pairs_) out.push_back(pp.prime);
    return out;
  }

  /// Exponent of p; 0 when p does not divide the number.
  u64 exponent(u64 p) const {
    for (const auto& pp : pairs_) {
      if (pp.prime == p) return pp.exponent;
    }
    return 0;
  }

  u64 value() const {
    u64 v = 1;
    for (const auto& pp : pairs_) v = checked_mul(v, checked_pow(pp.prime, pp.exponent));
    return v;
  }

  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

inline Factorization factorize(u64 x) {
  require(x >= 1, "factorize: x must be a positive integer");
  std::vector<PrimePower> pairs;
  auto take = [&](u64 p) {
    u64 e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) pairs.push_back({p, e});
  };
  take(2);
  take(3);
  for (u64 d = 5; d <= x / d; d += 6) {
    take(d);
    take(d + 2);
  }
  if (x > 1) pairs.push_back({x, 1});
  return Factorization(std::move(pairs));
}

inline std::vector<u64> prime_divisors(u64 x) { return factorize(x).primes(); }

/// Product of the distinct primes dividing x.
inline u64 radical(u64 x) {
  u64 r = 1;
  for (u64 p : prime_divisors(x)) r *= p;
  return r;
}

/// Largest divisor of x coprime with y.
inline u64 dagger(u64 x, u64 y) {
  require(x >= 1 && y >= 1, "dagger: arguments must be positive integers");
  for (u64 g = gcd(x, y); g > 1; g = gcd(x, g)) {
    while (x % g == 0) x /= g;
  }
  return x;
}

inline bool is_square_free(u64 x) {
  for (const auto& pp : factorize(x).pairs()) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

/// All primes <= n, ascending (sieve of Eratosthenes).
inline std::vector<u64> primes_up_to(u64 n) {
  require(n >= 1, "primes_up_to: n must be a positive integer");
  if (n > kMaxSieve) throw OverflowError("primes_up_to: n exceeds the sieve limit");
  std::vector<bool> composite(n + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

/// Least prime strictly greater than n.
inline u64 next_prime(u64 n) {
  for (u64 c = checked_add(n, 1);; c = checked_add(c, 1)) {
    if (is_prime(c)) return c;
  }
}

/// Least prime in {a + b*n : n >= 0} not exceeding search_bound. An empty
/// result means the bound was exhausted, not that no such prime exists.
inline std::optional<u64> least_prime_in_progression(u64 a, u64 b, u64 search_bound) {
  require(a >= 1 && b >= 1, "least_prime_in_progression: a and b must be positive");
  require(gcd(a, b) == 1, "least_prime_in_progression: gcd(a,b) must be 1 (Dirichlet's condition)");
  for (u64 v = a; v <= search_bound; ) {
    if (is_prime(v)) return v;
    if (v > kMaxU64 - b) break;
    v += b;
  }
  return std::nullopt;
}

// --- roots and powers ------------------------------------------------------

/// floor(x^(1/k)) for k >= 1.
inline u64 iroot(u64 x, u64 k) {
  require(k >= 1, "iroot: k must be positive");
  if (k == 1 || x < 2) return x;
  if (k >= 64) return 1;
  auto pow_le = [&](u64 r) {  // r^k <= x without overflow
    u128 acc = 1;
    for (u64 i = 0; i < k; ++i) {
      acc *= r;
      if (acc > x) return false;
    }
    return true;
  };
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(x), 1.0L / static_cast<long double>(k)));
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

inline u64 isqrt(u64 x) { return iroot(x, 2); }

inline bool is_kth_power(u64 x, u64 k) {
  u64 r = iroot(x, k);
  u128 acc = 1;
  for (u64 i = 0; i < k; ++i) acc *= r;
  return acc == x;
}

struct PerfectPower {
  u64 base;
  u64 exponent;
  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

/// x = base^exponent with exponent >= 2 maximal (so base is not itself a
/// perfect power). Empty for non-powers and for 1.
inline std::optional<PerfectPower> is_perfect_power(u64 x) {
  require(x >= 1, "is_perfect_power: x must be a positive integer");
  if (x < 4) return std::nullopt;
  for (u64 k = 63; k >= 2; --k) {
    if (is_kth_power(x, k)) return PerfectPower{iroot(x, k), k};
  }
  return std::nullopt;
}

/// The e >= 0 with base^e = value, if any. Bases below 2 have no unique
/// exponent and always yield nothing.
inline std::optional<u64> exponent_of(u64 base, u64 value) {
  if (base < 2 || value == 0) return std::nullopt;
  u64 e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

}  // namespace golomb
