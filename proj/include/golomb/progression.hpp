#pragma once

// Arithmetic progressions a + bN0 and a + bZ, and the Chinese Remainder
// algebra of finite systems of them.

#include <optional>
#include <utility>
#include <vector>

#include "golomb/arith.hpp"

namespace golomb {

enum class Carrier {
  NonNegative,  // {a + b*n : n >= 0}
  Integer,      // a + bZ
};

class Progression {
 public:
  /// {a + b*n : n >= 0}; the literal residue is kept since it is the least element.
  static Progression non_negative(i64 a, u64 b) {
    require(b >= 1, "progression modulus must be >= 1");
    require(a >= 0, "a + bN0 needs a >= 0");
    check_modulus(b);
    return Progression(a, b, Carrier::NonNegative);
  }

  /// a + bZ in canonical form 0 <= a < b.
  static Progression integer(i64 a, u64 b) {
    require(b >= 1, "progression modulus must be >= 1");
    check_modulus(b);
    return Progression(static_cast<i64>(mod_floor(a, b)), b, Carrier::Integer);
  }

  i64 residue() const { return residue_; }
  u64 modulus() const { return modulus_; }
  Carrier carrier() const { return carrier_; }

  bool contains(i128 x) const {
    if (carrier_ == Carrier::NonNegative && x < residue_) return false;
    return divides(modulus_, x - residue_);
  }

  /// Least member that is a positive integer.
  u64 least_positive() const { return residue_ > 0 ? static_cast<u64>(residue_) : modulus_; }

  friend bool operator==(const Progression&, const Progression&) = default;

 private:
  Progression(i64 a, u64 b, Carrier c) : residue_(a), modulus_(b), carrier_(c) {}

  static void check_modulus(u64 b) {
    if (b > static_cast<u64>(kMaxI64)) throw OverflowError("progression modulus exceeds 63 bits");
  }

  i64 residue_;
  u64 modulus_;
  Carrier carrier_;
};

/// Finite conjunction of progression constraints. The solution set lives in
/// N whenever a NonNegative constraint is present or naturals_only is set.
struct ProgressionSystem {
  std::vector<Progression> constraints;
  bool naturals_only = false;

  bool restricted_to_naturals() const {
    if (naturals_only) return true;
    for (const auto& c : constraints) {
      if (c.carrier() == Carrier::NonNegative) return true;
    }
    return false;
  }

  bool contains(i128 x) const {
    if (restricted_to_naturals() && x < 1) return false;
    for (const auto& c : constraints) {
      if (!c.contains(x)) return false;
    }
    return true;
  }
};

namespace detail {

struct Congruence {
  u64 residue;
  u64 modulus;
};

/// Solves x = r1 (m1), x = r2 (m2). Empty when gcd(m1,m2) does not divide r2-r1.
inline std::optional<Congruence> crt_pair(Congruence a, Congruence b) {
  const u64 g = gcd(a.modulus, b.modulus);
  const i128 diff = static_cast<i128>(b.residue) - static_cast<i128>(a.residue);
  if (diff % static_cast<i128>(g) != 0) return std::nullopt;
  const u64 m2g = b.modulus / g;
  const u64 combined = checked_mul(a.modulus, m2g);
  if (combined > static_cast<u64>(kMaxI64)) throw OverflowError("lcm of moduli exceeds 63 bits");
  if (m2g == 1) return Congruence{a.residue, combined};
  const u64 inv = *mod_inverse((a.modulus / g) % m2g, m2g);
  const u64 t = mul_mod(mod_floor(diff / static_cast<i128>(g), m2g), inv, m2g);
  const i128 x = static_cast<i128>(a.residue) + static_cast<i128>(a.modulus) * t;
  return Congruence{mod_floor(x, combined), combined};
}

inline std::optional<Congruence> crt_all(const std::vector<Congruence>& cs) {
  Congruence acc{0, 1};
  for (const auto& c : cs) {
    auto next = crt_pair(acc, {c.residue % c.modulus, c.modulus});
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

}  // namespace detail

/// Pairwise criterion: gcd(b_i, b_j) divides a_i - a_j for all i, j.
inline bool crt_consistent(const ProgressionSystem& system) {
  require(!system.constraints.empty(), "crt_consistent: constraint list must be nonempty");
  const auto& cs = system.constraints;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const u64 g = gcd(cs[i].modulus(), cs[j].modulus());
      if (!divides(g, static_cast<i128>(cs[i].residue()) - cs[j].residue())) return false;
    }
  }
  return true;
}

/// The Z-intersection c + lcm(b_i)Z in canonical form, or empty when inconsistent.
inline std::optional<Progression> intersect(const ProgressionSystem& system) {
  require(!system.constraints.empty(), "intersect: constraint list must be nonempty");
  std::vector<detail::Congruence> cs;
  cs.reserve(system.constraints.size());
  for (const auto& c : system.constraints) {
    cs.push_back({mod_floor(c.residue(), c.modulus()), c.modulus()});
  }
  auto solved = detail::crt_all(cs);
  if (!solved) return std::nullopt;
  return Progression::integer(static_cast<i64>(solved->residue), solved->modulus);
}

/// Least positive integer of the full mixed-carrier intersection.
inline std::optional<u64> least_element(const ProgressionSystem& system) {
  if (system.constraints.empty()) return 1;
  auto cls = intersect(system);
  if (!cls) return std::nullopt;
  i128 lower = 1;
  for (const auto& c : system.constraints) {
    if (c.carrier() == Carrier::NonNegative) lower = std::max<i128>(lower, c.residue());
  }
  const i128 m = cls->modulus();
  const i128 r = cls->residue();
  i128 steps = (lower - r + m - 1) / m;
  if (steps < 0) steps = 0;
  const i128 least = r + steps * m;
  if (least > static_cast<i128>(kMaxU64)) throw OverflowError("least element exceeds 64 bits");
  return static_cast<u64>(least);
}

/// Members of p in [1, limit], ascending.
inline std::vector<u64> enumerate(const Progression& p, u64 limit) {
  std::vector<u64> out;
  for (u64 v = p.least_positive(); v <= limit; ) {
    out.push_back(v);
    if (v > kMaxU64 - p.modulus()) break;
    v += p.modulus();
  }
  return out;
}

}  // namespace golomb
