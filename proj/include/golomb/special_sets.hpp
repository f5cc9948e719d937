#pragma once

// Closed and non-closed special subsets of the Golomb space: images of
// x^2 + nx, the disjoint superconnected family X_n, and the eighth powers X_8,
// whose closure contains 16 although x^8 = 16 has no integer solution.

#include <optional>
#include <string>
#include <vector>

#include "golomb/arith.hpp"
#include "golomb/progression.hpp"

namespace golomb {

// --- images of x^2 + nx ------------------------------------------------------

/// {x^2 + nx : x in N}.
struct QuadraticImageSet {
  u64 n = 0;

  u64 value(u64 x) const { return checked_mul(x, checked_add(x, n)); }

  /// z is in the set iff n^2 + 4z is a square s^2 with s > n and s = n (mod 2).
  bool contains(u64 z) const {
    const u64 disc = checked_add(checked_mul(n, n), checked_mul(4, z));
    const u64 s = isqrt(disc);
    return s * s == disc && s > n && (s - n) % 2 == 0;
  }
};

struct FrobCertificate {
  u64 p;        // a + pN0 misses the set
  u64 window;   // disjointness verified on [1, window]
  u64 members_checked;
};

/// The least prime p in (a, prime_bound] such that x^2 + nx - a has no root
/// mod p; then a + pN0 is a neighbourhood of a disjoint from the set.
inline FrobCertificate frob_closedness_certificate(u64 n, u64 a, u64 prime_bound = 10'000,
                                                   u64 window = 10'000) {
  require(a >= 1, "frob: a must be a positive integer");
  const QuadraticImageSet set{n};
  if (set.contains(a)) {
    throw MemberInput("frob: " + std::to_string(a) + " lies in {x^2+" + std::to_string(n) + "x}");
  }
  for (u64 p : primes_up_to(std::max<u64>(prime_bound, 1))) {
    if (p <= a) continue;
    bool has_root = false;
    const u64 nm = n % p, am = a % p;
    for (u64 r = 0; r < p && !has_root; ++r) {
      has_root = (r * r + nm * r + p - am) % p == 0;
    }
    if (has_root) continue;
    FrobCertificate cert{p, window, 0};
    for (u64 x = 1; set.value(x) <= window; ++x) {
      const u64 z = set.value(x);
      ++cert.members_checked;
      if (z >= a && (z - a) % p == 0) {
        throw InternalInvariantViolation("frob: " + std::to_string(z) + " lies in a+pN0");
      }
    }
    return cert;
  }
  throw NotFoundWithinBound("frob: no certifying prime <= " + std::to_string(prime_bound));
}

// --- the disjoint family X_n = p_n N intersected with f_n(N) -----------------

struct FamilyMember {
  u64 n;
  u64 p;                  // least prime > n^2 + n
  Progression multiples;  // p + pN0 = pN
  Progression shifted;    // (p - n) + pN0
  /// f_n^{-1}(X_n) = pN union (p - n + pN0)
  bool preimage_contains(u64 x) const { return multiples.contains(x) || shifted.contains(x); }
  /// z in X_n
  bool contains(u64 z) const { return z % p == 0 && QuadraticImageSet{n}.contains(z); }
};

inline FamilyMember disjoint_family_member(u64 n) {
  require(n >= 1, "family: n must be >= 1");
  const u64 p = next_prime(checked_add(checked_mul(n, n), n));
  return {n, p, Progression::non_negative(static_cast<i64>(p), p),
          Progression::non_negative(static_cast<i64>(p - n), p)};
}

struct FamilyDisjointness {
  bool disjoint;
  std::optional<u64> common;  // first common element, if any
  u64 members_scanned;
  i64 y_upper;  // any common z = y^2 + my forces y <= m^2 - n^2
  i64 y_lower;  // ... and y >= p_m - m
  bool bounds_contradict;
};

inline FamilyDisjointness verify_family_disjoint(u64 n, u64 m, u64 window) {
  require(n >= 1 && n < m, "family: need 1 <= n < m");
  const auto xn = disjoint_family_member(n);
  const auto xm = disjoint_family_member(m);
  FamilyDisjointness out{true, std::nullopt, 0,
                         narrow_i64(static_cast<i128>(m) * m - static_cast<i128>(n) * n),
                         narrow_i64(static_cast<i128>(xm.p) - m), false};
  out.bounds_contradict = out.y_lower > out.y_upper;
  const QuadraticImageSet fn{n};
  for (u64 x = 1; fn.value(x) <= window; ++x) {
    const u64 z = fn.value(x);
    if (z % xn.p != 0) continue;
    ++out.members_scanned;
    if (xm.contains(z)) {
      out.disjoint = false;
      out.common = z;
      break;
    }
  }
  return out;
}

// --- square roots modulo a prime ---------------------------------------------

namespace detail {

inline u64 tonelli_shanks(u64 r, u64 p) {
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(r, q, p);
  u64 root = pow_mod(r, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    for (u64 tt = t; tt != 1; tt = mul_mod(tt, tt, p)) ++i;
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    root = mul_mod(root, b, p);
  }
  return root;
}

}  // namespace detail

inline constexpr u64 kExhaustiveSqrtLimit = 10'000;

/// Smallest r in [0, p) with r^2 = a (mod p), or nothing for a non-residue.
inline std::optional<u64> sqrt_mod_prime(i64 a, u64 p) {
  require(p > 2 && is_prime(p), "sqrt_mod_prime: p must be an odd prime");
  const u64 r = mod_floor(a, p);
  if (r == 0) return 0;
  if (p <= kExhaustiveSqrtLimit) {
    for (u64 x = 1; x < p; ++x) {
      if (x * x % p == r) return x;
    }
    return std::nullopt;
  }
  if (pow_mod(r, (p - 1) / 2, p) != 1) return std::nullopt;
  const u64 root = detail::tonelli_shanks(r, p);
  return std::min(root, p - root);
}

// --- x^8 = 16 modulo odd prime powers -----------------------------------------

/// A root of x^8 - 16 modulo an odd prime p, using the factorization
/// (x^2-2)(x^2+2)(x^2-2x+2)(x^2+2x+2): a square root of 2 or of -2 if one
/// exists, else 1 + i with i^2 = -1.
inline u64 root_x8_16_mod_p(u64 p) {
  require(p > 2 && is_prime(p), "root_x8_16_mod_p: p must be an odd prime");
  std::optional<u64> r = sqrt_mod_prime(2, p);
  if (!r) r = sqrt_mod_prime(-2, p);
  if (!r) {
    if (auto i = sqrt_mod_prime(-1, p)) r = (1 + *i) % p;
  }
  if (!r || pow_mod(*r, 8, p) != 16 % p) {
    throw InternalInvariantViolation("root_x8_16_mod_p: none of 2, -2, -1 is a residue mod " + std::to_string(p));
  }
  return *r;
}

/// r in [0, p^k) with r^8 = 16 (mod p^k), by Newton steps from the root mod p.
inline u64 hensel_lift(u64 p, u64 k) {
  require(k >= 1, "hensel: k must be >= 1");
  u64 r = root_x8_16_mod_p(p);
  const u64 pk = checked_pow(p, k);
  u64 mod = p;
  for (u64 j = 1; j < k; ++j) {
    mod *= p;
    const u64 deriv = mul_mod(8, pow_mod(r, 7, mod), mod);
    if (deriv % p == 0) throw InternalInvariantViolation("hensel: f'(r) vanishes mod p");
    const u64 value = mod_floor(static_cast<i128>(pow_mod(r, 8, mod)) - 16, mod);
    const u64 step = mul_mod(value, *mod_inverse(deriv, mod), mod);
    r = mod_floor(static_cast<i128>(r) - step, mod);
  }
  if (pow_mod(r, 8, pk) != 16 % pk) throw InternalInvariantViolation("hensel: lifted root fails");
  return r;
}

struct HenselRoot {
  u64 prime;
  u64 exponent;  // l_p(b)
  u64 modulus;   // p^exponent
  u64 root;
};

struct X8Witness {
  u64 x;      // least x >= 16 in the CRT class of the roots
  u64 b;
  u64 residue;  // x^8 mod b, equal to 16 mod b
  std::vector<HenselRoot> roots;
};

/// For odd b: x >= 16 with x^8 in 16 + bN0, so every basic neighbourhood of
/// 16 meets X_8 = {x^8}.
inline X8Witness closure_point_witness_x8(u64 b) {
  require(b >= 1 && b % 2 == 1, "x8-witness: b must be odd (16+bN0 is a neighbourhood of 16 only for odd b)");
  X8Witness w{0, b, 0, {}};
  std::vector<detail::Congruence> cs;
  for (const auto& pp : factorize(b).pairs()) {
    const u64 mod = checked_pow(pp.prime, pp.exponent);
    const u64 root = hensel_lift(pp.prime, pp.exponent);
    w.roots.push_back({pp.prime, pp.exponent, mod, root});
    cs.push_back({root, mod});
  }
  const auto c = detail::crt_all(cs);
  if (!c) throw InternalInvariantViolation("x8-witness: CRT over coprime moduli failed");
  w.x = c->residue;
  if (w.x < 16) w.x = checked_add(w.x, checked_mul((16 - w.x + b - 1) / b, b));
  w.residue = pow_mod(w.x, 8, b);
  if (w.residue != 16 % b) throw InternalInvariantViolation("x8-witness: x^8 != 16 mod b");
  return w;
}

inline bool in_x8(u64 z) { return z >= 1 && is_kth_power(z, 8); }

struct WangBracket {
  u64 lower;  // lower^8 < 16
  u64 lower_power;
  u64 upper;  // upper^8 > 16
  u64 upper_power;
};

/// x^8 is strictly increasing on N and 1^8 < 16 < 2^8, so 16 is not an eighth power.
inline WangBracket wang_no_integer_solution() {
  WangBracket w{1, checked_pow(1, 8), 2, checked_pow(2, 8)};
  if (!(w.lower_power < 16 && 16 < w.upper_power) || in_x8(16)) {
    throw InternalInvariantViolation("wang: bracket check failed");
  }
  return w;
}

struct X8nWitness {
  u64 n;
  u64 point;        // 16^n, in the closure of X_8n but not in X_8n
  u64 x;            // x^(8n) lies in 16^n + bN0
  u64 exponent;     // 8n
  u64 b;
  u64 image_residue;  // x^(8n) mod b
  u64 point_residue;  // 16^n mod b
  PerfectPower point_as_power;  // 16^n = 2^(4n)
};

inline X8nWitness x8n_closure_witness(u64 n, u64 b) {
  require(n >= 1, "x8n: n must be >= 1");
  const auto base = closure_point_witness_x8(b);
  X8nWitness w{n, checked_pow(16, n), base.x, checked_mul(8, n), b, 0, 0, {2, 4 * n}};
  w.image_residue = pow_mod(base.x, w.exponent, b);
  w.point_residue = w.point % b;
  if (w.image_residue != w.point_residue) throw InternalInvariantViolation("x8n: x^(8n) != 16^n mod b");
  if (is_kth_power(w.point, w.exponent) || w.point_as_power != *is_perfect_power(w.point)) {
    throw InternalInvariantViolation("x8n: 16^n valuation check failed");
  }
  return w;
}

}  // namespace golomb
