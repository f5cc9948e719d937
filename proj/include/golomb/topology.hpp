#pragma once

// The Golomb topology on N: basic opens a + bN0 with gcd(a, b) = 1, their
// closures, and witness constructions for the separation properties of the
// space (superconnectedness, the filter of closures, regularity of the primes,
// non-regularity of basic subspaces).

#include <algorithm>
#include <set>
#include <vector>

#include "golomb/arith.hpp"
#include "golomb/progression.hpp"

namespace golomb {

/// A basic open set a + bN0 with a >= 1 and gcd(a, b) = 1.
class BasicOpen {
 public:
  BasicOpen(u64 a, u64 b) : a_(a), b_(b) {
    require(a >= 1 && b >= 1, "basic open a+bN0 needs a, b >= 1");
    require(gcd(a, b) == 1, "basic open a+bN0 needs gcd(a,b) = 1");
    if (a > static_cast<u64>(kMaxI64) || b > static_cast<u64>(kMaxI64)) {
      throw OverflowError("basic open parameters exceed 63 bits");
    }
  }

  u64 a() const { return a_; }
  u64 b() const { return b_; }
  Progression progression() const { return Progression::non_negative(static_cast<i64>(a_), b_); }
  bool contains(u64 x) const { return x >= a_ && (x - a_) % b_ == 0; }

  friend bool operator==(const BasicOpen&, const BasicOpen&) = default;

 private:
  u64 a_;
  u64 b_;
};

struct ClosureCondition {
  u64 prime;
  u64 prime_power;  // p^{l_p(b)}
  friend bool operator==(const ClosureCondition&, const ClosureCondition&) = default;
};

/// Symbolic closure of a + bN0:
///   N  intersected with  (pN  union  a + p^{l_p(b)}Z)  over p | b.
struct ClosureDescriptor {
  u64 base = 1;
  std::vector<ClosureCondition> conditions;

  bool contains(u64 x) const {
    if (x < 1) return false;
    for (const auto& c : conditions) {
      if (x % c.prime != 0 && !divides(c.prime_power, static_cast<i128>(x) - base)) return false;
    }
    return true;
  }

  friend bool operator==(const ClosureDescriptor&, const ClosureDescriptor&) = default;
};

/// Closure of a + bN0 for arbitrary a, b >= 1 (coprimality is not needed).
inline ClosureDescriptor closure_of_progression(u64 a, u64 b) {
  require(a >= 1 && b >= 1, "closure: a and b must be positive");
  ClosureDescriptor d{a, {}};
  for (const auto& pp : factorize(b).pairs()) {
    d.conditions.push_back({pp.prime, checked_pow(pp.prime, pp.exponent)});
  }
  return d;
}

inline ClosureDescriptor closure(const BasicOpen& u) { return closure_of_progression(u.a(), u.b()); }

/// Definition-level closure test: x is in cl(a + bN0) iff every basic
/// neighbourhood x + dN0 with d <= modulus_bound meets a + bN0. Exact once
/// modulus_bound >= b, since a separating d can always be taken to be a prime
/// power dividing b.
inline bool in_closure_oracle(u64 x, u64 a, u64 b, u64 modulus_bound) {
  require(x >= 1 && a >= 1 && b >= 1, "in_closure_oracle: arguments must be positive");
  require(modulus_bound >= b, "in_closure_oracle: modulus_bound must be >= b");
  const auto target = Progression::non_negative(static_cast<i64>(a), b);
  for (u64 d = 1; d <= modulus_bound; ++d) {
    if (gcd(d, x) != 1) continue;
    ProgressionSystem sys{{Progression::non_negative(static_cast<i64>(x), d), target}};
    if (!least_element(sys)) return false;
  }
  return true;
}

inline bool in_closure_oracle(u64 x, const BasicOpen& u, u64 modulus_bound) {
  return in_closure_oracle(x, u.a(), u.b(), modulus_bound);
}

// --- superconnectedness -----------------------------------------------------

struct SuperconnectWitness {
  u64 point;
  std::vector<u64> refined_moduli;  // f_j: modulus of a progression inside open j's trace
  std::vector<u64> primes;          // union of the prime divisors of the f_j
};

/// A point of X and of the closure of every open trace, where
/// X = union of pieces and the first piece has offset 0.
inline SuperconnectWitness superconnected_witness(const std::vector<Progression>& pieces,
                                                  const std::vector<BasicOpen>& opens, u64 window) {
  require(!pieces.empty(), "superconnect: X needs at least one piece");
  for (const auto& p : pieces) {
    require(p.carrier() == Carrier::NonNegative, "superconnect: pieces must be of the form a+bN0");
  }
  require(pieces.front().residue() == 0, "superconnect: the first piece must have offset a0 = 0");

  SuperconnectWitness w{0, {}, {}};
  std::vector<std::pair<u64, u64>> traces;  // (e_j, f_j)
  std::set<u64> primes;
  for (const auto& u : opens) {
    bool found = false;
    for (const auto& piece : pieces) {
      auto e = least_element({{piece, u.progression()}});
      if (!e) continue;
      const u64 f = lcm(piece.modulus(), u.b());
      traces.emplace_back(*e, f);
      w.refined_moduli.push_back(f);
      for (u64 p : prime_divisors(f)) primes.insert(p);
      found = true;
      break;
    }
    require(found, "superconnect: every open must meet X");
  }
  w.primes.assign(primes.begin(), primes.end());

  u64 m = pieces.front().modulus();
  for (u64 p : w.primes) m = lcm(m, p);
  w.point = m;
  if (w.point > window) {
    throw WindowExceeded("superconnect: witness " + std::to_string(w.point) + " exceeds window " +
                         std::to_string(window));
  }
  if (!pieces.front().contains(w.point)) throw InternalInvariantViolation("superconnect: witness not in X");
  for (const auto& [e, f] : traces) {
    if (!closure_of_progression(e, f).contains(w.point)) {
      throw InternalInvariantViolation("superconnect: witness outside a closure");
    }
  }
  return w;
}

/// Least square-free q with qN inside every closure: the product of all
/// primes dividing some modulus. Checked on [1, window].
inline u64 f0_base_element(const std::vector<BasicOpen>& opens, u64 window = 1000) {
  require(!opens.empty(), "f0_base_element: need at least one open set");
  std::set<u64> primes;
  for (const auto& u : opens) {
    for (u64 p : prime_divisors(u.b())) primes.insert(p);
  }
  u64 q = 1;
  for (u64 p : primes) q = checked_mul(q, p);
  for (const auto& u : opens) {
    const auto cl = closure(u);
    for (u64 z = q; z <= window; z += q) {
      if (!cl.contains(z)) throw InternalInvariantViolation("f0_base_element: qN escapes a closure");
    }
  }
  return q;
}

// --- neighbourhoods with prescribed closure intersections -----------------

struct Special1Witness {
  u64 n;
  u64 modulus;  // q^n
  BasicOpen ux;
  BasicOpen uy;
  u64 window;
};

/// Neighbourhoods x + q^n N0, y + q^n N0 whose closures meet exactly in qN,
/// with n the least exponent such that no p^n (p | q) divides x - y.
/// The identity is verified on [1, window] (default 10 q^n).
inline Special1Witness special1_witness(u64 x, u64 y, u64 q, u64 window = 0) {
  require(x >= 1 && y >= 1, "special1: x and y must be positive");
  require(x != y, "special1: x and y must be distinct");
  require(q > 1 && is_square_free(q), "special1: q must be square-free and > 1");
  require(gcd(q, x) == 1 && gcd(q, y) == 1, "special1: q must be coprime with x and y");
  const auto primes = prime_divisors(q);
  const u128 diff = x > y ? x - y : y - x;
  u64 n = 1;
  for (;; ++n) {
    bool ok = true;
    for (u64 p : primes) {
      u128 pn = 1;
      for (u64 i = 0; i < n && pn <= diff; ++i) pn *= p;
      if (pn <= diff && diff % pn == 0) ok = false;
    }
    if (ok) break;
  }
  const u64 modulus = checked_pow(q, n);
  Special1Witness w{n, modulus, BasicOpen(x, modulus), BasicOpen(y, modulus),
                    window == 0 ? checked_mul(10, modulus) : window};
  const auto cx = closure(w.ux);
  const auto cy = closure(w.uy);
  for (u64 z = 1; z <= w.window; ++z) {
    if ((cx.contains(z) && cy.contains(z)) != (z % q == 0)) {
      throw InternalInvariantViolation("special1: closure intersection differs from qN at " +
                                       std::to_string(z));
    }
  }
  return w;
}

/// For neighbourhoods x + bN0 and y + dN0 and a square-free q sharing a prime
/// with x or y: a point of cl(x + bN0) and cl(y + dN0) outside qN.
inline u64 special1_refutation_point(u64 x, u64 b, u64 y, u64 d, u64 q) {
  const BasicOpen ux(x, b), uy(y, d);
  require(x != y, "special1 refutation: x and y must be distinct");
  require(q > 1 && is_square_free(q), "special1 refutation: q must be square-free and > 1");
  u64 p = 0;
  for (u64 r : prime_divisors(q)) {
    if (x % r == 0 || y % r == 0) {
      p = r;
      break;
    }
  }
  require(p != 0, "special1 refutation: q must share a prime with x or y");
  if (x % p != 0) {
    std::swap(x, y);
    std::swap(b, d);
  }
  // Now p | x, hence p does not divide b.
  std::set<u64> rs;
  for (u64 r : prime_divisors(b)) rs.insert(r);
  for (u64 r : prime_divisors(d)) rs.insert(r);
  ProgressionSystem sys;
  if (d % p != 0) {
    sys.constraints.push_back(Progression::non_negative(1, p));
  } else {
    rs.erase(p);
    sys.constraints.push_back(
        Progression::non_negative(static_cast<i64>(y), checked_pow(p, factorize(d).exponent(p))));
  }
  for (u64 r : rs) sys.constraints.push_back(Progression::non_negative(static_cast<i64>(r), r));
  auto point = least_element(sys);
  if (!point) throw InternalInvariantViolation("special1 refutation: CRT system empty");
  if (!closure(ux).contains(*point) || !closure(uy).contains(*point) || *point % q == 0) {
    throw InternalInvariantViolation("special1 refutation: point fails verification");
  }
  return *point;
}

/// Prime divisors of x (x >= 1) recovered through the filter F_x: a prime
/// p <= prime_bound divides x iff the neighbourhood construction for (x, 1, p)
/// is impossible. Cross-checked against trial division.
inline std::vector<u64> pi_via_filter(u64 x, u64 prime_bound) {
  require(x >= 1, "pi_via_filter: x must be positive");
  std::vector<u64> out;
  if (x == 1) return out;
  for (u64 p : primes_up_to(std::max<u64>(prime_bound, 1))) {
    try {
      special1_witness(x, 1, p);
    } catch (const PreconditionViolation&) {
      out.push_back(p);
    }
  }
  std::vector<u64> expected;
  for (u64 p : prime_divisors(x)) {
    if (p <= prime_bound) expected.push_back(p);
  }
  if (out != expected) throw InternalInvariantViolation("pi_via_filter: disagrees with factorization");
  return out;
}

// --- the primes as a regular subspace ---------------------------------------

struct RegularNeighborhood {
  u64 n;
  u64 modulus;  // b^n
  u64 window;
  u64 primes_checked;
};

/// For a prime x and a neighbourhood x + bN0 (|Pi_b| > 1): the least n with
/// b^n > x and r^n not dividing p - x for all p, r | b. Every prime of
/// cl(x + b^n N0) then lies in x + bN0; this is checked on [1, window].
inline RegularNeighborhood regular_neighborhood_for_prime(u64 x, u64 b, u64 window = 10'000) {
  require(is_prime(x), "regular-nbhd: x must be prime");
  require(b >= 1 && gcd(x, b) == 1, "regular-nbhd: x must not divide b");
  const auto pb = prime_divisors(b);
  require(pb.size() > 1, "regular-nbhd: b must have at least two prime divisors");

  auto good = [&](u64 n) {
    u128 bn = 1;
    for (u64 i = 0; i < n && bn <= x; ++i) bn *= b;
    if (bn <= x) return false;
    for (u64 p : pb) {
      const i128 diff = static_cast<i128>(p) - static_cast<i128>(x);
      const u128 mag = diff < 0 ? static_cast<u128>(-diff) : static_cast<u128>(diff);
      for (u64 r : pb) {
        u128 rn = 1;
        for (u64 i = 0; i < n && rn <= mag; ++i) rn *= r;
        if (rn <= mag && mag % rn == 0) return false;
      }
    }
    return true;
  };
  u64 n = 1;
  while (!good(n)) ++n;

  RegularNeighborhood out{n, checked_pow(b, n), window, 0};
  const auto cl = closure_of_progression(x, out.modulus);
  for (u64 z = 2; z <= window; ++z) {
    if (!is_prime(z) || !cl.contains(z)) continue;
    ++out.primes_checked;
    if (z < x || (z - x) % b != 0) {
      throw InternalInvariantViolation("regular-nbhd: prime " + std::to_string(z) + " escapes x+bN0");
    }
  }
  return out;
}

// --- basic subspaces: non-regular, totally disconnected ---------------------

struct NonregularityWitness {
  u64 point;
  u64 w_modulus;  // qbc: W = a + qbc N0
  u64 v_modulus;  // qb:  V = a + qb N0
};

/// A point of X = a + bN0 lying in cl(a + qbc N0) and in qN, hence outside
/// the neighbourhood V = a + qb N0 of a.
inline NonregularityWitness nonregularity_witness(u64 a, u64 b, u64 q, u64 c, u64 window) {
  require(a >= 1 && b >= 1 && c >= 1, "nonregular: a, b, c must be positive");
  require(gcd(a, b) == 1, "nonregular: gcd(a,b) must be 1");
  require(is_prime(q), "nonregular: q must be prime");
  require(a % q != 0 && b % q != 0, "nonregular: q must not divide a or b");
  require(gcd(c, a) == 1, "nonregular: c must be coprime with a");
  const u64 qb = checked_mul(q, b);
  const u64 qbc = checked_mul(qb, c);
  const auto fq = factorize(qbc);
  ProgressionSystem sys;
  for (const auto& pp : fq.pairs()) {
    if (b % pp.prime == 0) {
      sys.constraints.push_back(
          Progression::non_negative(static_cast<i64>(a), checked_pow(pp.prime, pp.exponent)));
    } else {
      sys.constraints.push_back(Progression::non_negative(static_cast<i64>(pp.prime), pp.prime));
    }
  }
  auto point = least_element(sys);
  if (!point) throw InternalInvariantViolation("nonregular: CRT system empty");
  if (*point > window) {
    throw WindowExceeded("nonregular: witness " + std::to_string(*point) + " exceeds window");
  }
  const u64 z = *point;
  const bool in_x = z >= a && (z - a) % b == 0;
  const bool in_v = z >= a && (z - a) % qb == 0;
  if (!closure_of_progression(a, qbc).contains(z) || z % q != 0 || !in_x || in_v) {
    throw InternalInvariantViolation("nonregular: witness fails verification");
  }
  return {z, qbc, qb};
}

/// Least n with b^n not dividing x - y; x and y then sit in different members
/// of the clopen partition {X intersected with z + b^n Z}.
inline u64 disconnection_witness(u64 a, u64 b, u64 x, u64 y) {
  require(b >= 2, "disconnect: b must be >= 2 (a+1N0 is all of N, which is connected)");
  require(x != y, "disconnect: x and y must be distinct");
  require(x >= a && (x - a) % b == 0, "disconnect: x must lie in a+bN0");
  require(y >= a && (y - a) % b == 0, "disconnect: y must lie in a+bN0");
  const u128 diff = x > y ? x - y : y - x;
  u64 n = 1;
  for (u128 bn = b; diff % bn == 0; bn *= b) ++n;
  return n;
}

}  // namespace golomb
