#pragma once

// Continuous self-maps of the Golomb space: progressive functions, continuity
// certificates, the constant-term criterion for integer polynomials, and the
// tree of increasing progressive prefixes.

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "golomb/arith.hpp"
#include "golomb/progression.hpp"

namespace golomb {

// --- progressive functions -------------------------------------------------

enum class ProgressiveCondition {
  PrimeDivisors,  // Pi_k not contained in Pi_{f(k)}
  Divisibility,   // (y-x) dagger f(x) does not divide f(y) - f(x)
  NotIncreasing,  // tree mode only
};

struct ProgressiveViolation {
  ProgressiveCondition condition;
  u64 x;  // 1-based; for PrimeDivisors x == y
  u64 y;
};

struct ProgressiveCheck {
  std::optional<ProgressiveViolation> violation;
  explicit operator bool() const { return !violation.has_value(); }
};

/// Checks f(1..n) = values for the progressive property; with tree_mode the
/// values must also be strictly increasing. Reports the first violation in
/// order of the larger index.
inline ProgressiveCheck is_progressive(std::span<const u64> values, bool tree_mode = false) {
  require(!values.empty(), "is_progressive: need at least one value");
  for (u64 v : values) require(v >= 1, "is_progressive: values must be positive integers");
  const u64 n = values.size();
  for (u64 y = 1; y <= n; ++y) {
    const u64 fy = values[y - 1];
    if (fy % radical(y) != 0) return {ProgressiveViolation{ProgressiveCondition::PrimeDivisors, y, y}};
    for (u64 x = 1; x < y; ++x) {
      const u64 fx = values[x - 1];
      if (tree_mode && x == y - 1 && fy <= fx) {
        return {ProgressiveViolation{ProgressiveCondition::NotIncreasing, x, y}};
      }
      if (!divides(dagger(y - x, fx), static_cast<i128>(fy) - fx)) {
        return {ProgressiveViolation{ProgressiveCondition::Divisibility, x, y}};
      }
    }
  }
  return {};
}

/// f(1..n) satisfying the progressive property.
class ProgressiveFunction {
 public:
  explicit ProgressiveFunction(std::vector<u64> values) : values_(std::move(values)) {
    require(static_cast<bool>(is_progressive(values_)), "progressive function: values are not progressive");
  }
  std::span<const u64> values() const { return values_; }
  u64 size() const { return values_.size(); }
  u64 operator()(u64 k) const { return values_.at(k - 1); }

 private:
  std::vector<u64> values_;
};

// --- successors in the tree of increasing progressive prefixes ---------------

struct SuccessorSet {
  std::optional<Progression> y_f;  // c + LZ; g(n+1) ranges over its members above f(n)
  bool condition1;                  // gcd(p, (n+1-k) dagger f(k)) | f(k)
  bool condition2;                  // gcd of daggers for k < l divides f(l) - f(k)
};

/// The admissible values for g(n+1) over a prefix f(1..n):
///   multiples of every p | n+1, and f(k) mod (n+1-k) dagger f(k) for all k.
inline SuccessorSet successor_set(std::span<const u64> f) {
  require(!f.empty(), "successor_set: prefix must be nonempty");
  const u64 n = f.size();
  SuccessorSet s{std::nullopt, true, true};
  std::vector<u64> daggers(n + 1);
  for (u64 k = 1; k <= n; ++k) daggers[k] = dagger(n + 1 - k, f[k - 1]);
  const auto pn = prime_divisors(n + 1);
  for (u64 p : pn) {
    for (u64 k = 1; k <= n; ++k) {
      if (f[k - 1] % gcd(p, daggers[k]) != 0) s.condition1 = false;
    }
  }
  for (u64 k = 1; k <= n; ++k) {
    for (u64 l = k + 1; l <= n; ++l) {
      if (!divides(gcd(daggers[k], daggers[l]), static_cast<i128>(f[l - 1]) - f[k - 1])) s.condition2 = false;
    }
  }
  ProgressionSystem sys;
  for (u64 p : pn) sys.constraints.push_back(Progression::integer(0, p));
  for (u64 k = 1; k <= n; ++k) {
    sys.constraints.push_back(Progression::integer(static_cast<i64>(f[k - 1]), daggers[k]));
  }
  s.y_f = intersect(sys);
  return s;
}

/// The first `count` values g(n+1) > f(n) extending an increasing progressive
/// prefix, ascending. Each extension is re-checked.
inline std::vector<u64> enumerate_successors(std::span<const u64> f, u64 count) {
  require(static_cast<bool>(is_progressive(f, true)), "successors: prefix must be increasing and progressive");
  if (count == 0) return {};
  const auto s = successor_set(f);
  if (!s.condition1 || !s.condition2 || !s.y_f) {
    throw InternalInvariantViolation("successors: CRT conditions for Y_f failed");
  }
  const u64 m = s.y_f->modulus();
  const u64 last = f.back();
  u64 v = static_cast<u64>(s.y_f->residue());
  if (v <= last) v = checked_add(v, checked_mul((last - v) / m + 1, m));
  std::vector<u64> ext(f.begin(), f.end());
  ext.push_back(0);
  std::vector<u64> out;
  out.reserve(count);
  for (; out.size() < count; v = checked_add(v, m)) {
    ext.back() = v;
    if (!is_progressive(ext, true)) {
      throw InternalInvariantViolation("successors: extension by " + std::to_string(v) + " is not progressive");
    }
    out.push_back(v);
  }
  return out;
}

// --- integer polynomials ---------------------------------------------------

class IntPolynomial {
 public:
  /// Coefficients a0, a1, ..., ad. Trailing zeros are dropped.
  explicit IntPolynomial(std::vector<i64> coefficients) : c_(std::move(coefficients)) {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
  }

  const std::vector<i64>& coefficients() const { return c_; }
  u64 degree() const { return c_.size() - 1; }
  bool is_constant() const { return c_.size() == 1; }
  i64 constant_term() const { return c_.front(); }

  i128 evaluate_wide(u64 x) const {
    i128 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (__builtin_mul_overflow(acc, static_cast<i128>(x), &acc) ||
          __builtin_add_overflow(acc, static_cast<i128>(*it), &acc)) {
        throw OverflowError("polynomial value exceeds 127 bits");
      }
    }
    return acc;
  }

  i64 evaluate(u64 x) const { return narrow_i64(evaluate_wide(x)); }
  i128 operator()(u64 x) const { return evaluate_wide(x); }

 private:
  std::vector<i64> c_;
};

// --- continuity certificates ---------------------------------------------

struct ContinuityCertificate {
  u64 d;                     // x + dN0 minus `removed` maps into f(x) + bN0
  std::vector<u64> removed;  // neighbourhood points with f(y) in (f(x)+dZ) below f(x)
  u64 window;
  u64 points_checked;
};

namespace detail {

template <class F>
ContinuityCertificate certify(const F& f, u64 x, u64 b, u64 d, u64 window) {
  require(x >= 1 && b >= 1, "continuity: x and b must be positive");
  const i128 fx = f(x);
  if (fx < 1) throw NotSelfMap("continuity: f(x) is not a positive integer");
  require(gcd(b, static_cast<u64>(fx)) == 1, "continuity: b must be coprime with f(x)");
  if (gcd(x, d) != 1) {
    throw WindowViolation("continuity: x+" + std::to_string(d) +
                          "N0 is not a neighbourhood of x (Pi_x not inside Pi_f(x); map is not progressive)");
  }
  ContinuityCertificate cert{d, {}, window, 0};
  for (u64 y = x; y <= window; ) {
    const i128 v = f(y);
    if (v < 1) throw NotSelfMap("continuity: f leaves N at " + std::to_string(y));
    ++cert.points_checked;
    const bool same_class = divides(d, v - fx);
    if (same_class && v < fx) {
      cert.removed.push_back(y);
    } else if (v < fx || !divides(b, v - fx)) {
      throw WindowViolation("continuity: f(" + std::to_string(y) + ") escapes f(x)+bN0");
    }
    if (y > kMaxU64 - d) break;
    y += d;
  }
  return cert;
}

}  // namespace detail

/// Certificate for a progressive, finite-to-one map given as a callable u64 -> integer.
template <class F>
  requires std::invocable<const F&, u64>
ContinuityCertificate continuity_certificate(const F& f, u64 x, u64 b, u64 window) {
  return detail::certify(f, x, b, b, window);
}

inline ContinuityCertificate continuity_certificate(const IntPolynomial& p, u64 x, u64 b, u64 window) {
  return detail::certify(p, x, b, p.is_constant() ? 1 : b, window);
}

/// Table form: f(1..n) = values; the window is clipped to n.
inline ContinuityCertificate continuity_certificate(std::span<const u64> values, u64 x, u64 b, u64 window) {
  require(x >= 1 && x <= values.size(), "continuity: x outside the table");
  bool constant = true;
  for (u64 v : values) constant = constant && v == values.front();
  auto f = [&](u64 y) { return static_cast<i128>(values[y - 1]); };
  return detail::certify(f, x, b, constant ? 1 : b, std::min<u64>(window, values.size()));
}

// --- the constant-term criterion --------------------------------------------

/// Split of f(X), X = pN  union  x + pN0, into the disjoint open traces
/// U = f(X) in a0 + pZ and V = f(X) in f(x) + pZ.
struct SplitWitness {
  u64 x;
  i64 fx;
  i64 a0;
  u64 p;
  u64 u_residue;  // a0 mod p
  u64 v_residue;  // f(x) mod p
  u64 window;
  u64 u_points;
  u64 v_points;
};

enum class PolynomialVerdictKind { ContinuousA0Zero, ContinuousConstant, Discontinuous };

struct PolynomialVerdict {
  PolynomialVerdictKind kind;
  std::optional<SplitWitness> split;
};

inline PolynomialVerdict polynomial_continuity(const IntPolynomial& f, u64 check_window = 100) {
  for (u64 y = 1; y <= check_window; ++y) {
    if (f(y) < 1) throw NotSelfMap("poly-cont: f(" + std::to_string(y) + ") is not a positive integer");
  }
  if (f.is_constant()) return {PolynomialVerdictKind::ContinuousConstant, std::nullopt};
  const i64 a0 = f.constant_term();
  if (a0 == 0) return {PolynomialVerdictKind::ContinuousA0Zero, std::nullopt};

  u64 x = 1;
  while (f(x) == a0) ++x;  // at most deg(f) roots of f - a0
  const i64 fx = f.evaluate(x);
  if (fx < 1) throw NotSelfMap("poly-cont: f(" + std::to_string(x) + ") is not a positive integer");
  const u64 abs_a0 = a0 < 0 ? static_cast<u64>(-static_cast<i128>(a0)) : static_cast<u64>(a0);
  // p > max(a0, x, f(x)); with a0 < 0 we also need p not dividing f(x) - a0.
  u64 p = next_prime(std::max({abs_a0, x, static_cast<u64>(fx)}));
  while (divides(p, static_cast<i128>(fx) - a0)) p = next_prime(p);

  SplitWitness w{x, fx, a0, p, mod_floor(a0, p), mod_floor(fx, p), checked_mul(10, p), 0, 0};
  if (w.u_residue == w.v_residue || w.u_residue == 0 || w.v_residue == 0) {
    throw InternalInvariantViolation("poly-cont: residue classes do not give disjoint opens");
  }
  for (u64 y = 1; y <= w.window; ++y) {
    const bool in_u = y % p == 0;
    const bool in_v = y >= x && (y - x) % p == 0;
    if (!in_u && !in_v) continue;
    const i128 v = f(y);
    if (v < 1) throw NotSelfMap("poly-cont: f leaves N at " + std::to_string(y));
    const u64 r = mod_floor(v, p);
    if (in_u) {
      ++w.u_points;
      if (r != w.u_residue) throw InternalInvariantViolation("poly-cont: f(pN) leaves a0+pZ");
    } else {
      ++w.v_points;
      if (r != w.v_residue) throw InternalInvariantViolation("poly-cont: f(x+pN0) leaves f(x)+pZ");
    }
  }
  if (w.u_points == 0 || w.v_points == 0) throw InternalInvariantViolation("poly-cont: empty side of split");
  return {PolynomialVerdictKind::Discontinuous, w};
}

// --- x -> (x + x^2)/2 ------------------------------------------------------

struct HalfSquareWitness {
  u64 point;  // 4n = 2 + 2b, in 2 + bN0
  u64 image;  // 2n(4n + 1), even, so outside 3 + 2N0
};

inline u64 half_square(u64 x) { return checked_mul(x, checked_add(x, 1)) / 2; }

/// Given a candidate neighbourhood 2 + bN0 of 2, a point of it whose image
/// misses the neighbourhood 3 + 2N0 of f(2) = 3.
inline HalfSquareWitness half_square_discontinuity_witness(u64 b) {
  require(b >= 1 && b % 2 == 1, "half-square: b must be odd (2+bN0 is a neighbourhood of 2 only for odd b)");
  const u64 n = (b + 1) / 2;
  const u64 point = checked_mul(4, n);
  HalfSquareWitness w{point, checked_mul(checked_mul(2, n), checked_add(point, 1))};
  if ((point - 2) % b != 0 || w.image != half_square(point) || w.image % 2 != 0) {
    throw InternalInvariantViolation("half-square: witness fails verification");
  }
  return w;
}

}  // namespace golomb
