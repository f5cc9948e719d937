#pragma once

// Finite-window filter for candidate self-homeomorphisms of the Golomb space.
// Every homeomorphism h fixes 1, maps primes onto primes, satisfies
// Pi_{h(x)} = h(Pi_x), and acts on powers through one multiplicative bijection
// mu: h(x^n) = h(x)^mu(n). A window passing all checks is only a candidate.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "golomb/arith.hpp"

namespace golomb {

/// h restricted to [1, N]. Values may exceed N; h^-1 is known only on the image.
class BijectionWindow {
 public:
  explicit BijectionWindow(std::vector<u64> forward) : forward_(std::move(forward)) {
    require(!forward_.empty(), "bijection window: N must be >= 1");
    for (u64 i = 0; i < forward_.size(); ++i) {
      require(forward_[i] >= 1, "bijection window: values must be positive integers");
      const bool fresh = backward_.emplace(forward_[i], i + 1).second;
      require(fresh, "bijection window: map is not injective (value " + std::to_string(forward_[i]) + " repeats)");
    }
  }

  static BijectionWindow identity(u64 n) {
    std::vector<u64> v(n);
    for (u64 i = 0; i < n; ++i) v[i] = i + 1;
    return BijectionWindow(std::move(v));
  }

  u64 size() const { return forward_.size(); }
  bool in_window(u64 x) const { return x >= 1 && x <= forward_.size(); }
  u64 operator()(u64 x) const { return forward_.at(x - 1); }
  const std::vector<u64>& values() const { return forward_; }

  std::optional<u64> inverse(u64 y) const {
    auto it = backward_.find(y);
    if (it == backward_.end()) return std::nullopt;
    return it->second;
  }

  BijectionWindow restricted(u64 m) const {
    require(m >= 1 && m <= size(), "bijection window: restriction size out of range");
    return BijectionWindow(std::vector<u64>(forward_.begin(), forward_.begin() + static_cast<std::ptrdiff_t>(m)));
  }

 private:
  std::vector<u64> forward_;
  std::unordered_map<u64, u64> backward_;
};

enum class Verdict { Pass, Fail, Indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

struct Witness {
  u64 x;
  std::string detail;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string name) : item(std::move(name)) {}

  std::string item;
  Verdict verdict = Verdict::Indeterminate;
  std::vector<Witness> violations;  // first few, in order of discovery
  u64 failures = 0;
  u64 checked = 0;
  u64 indeterminate = 0;

  void fail(u64 x, std::string detail) {
    ++failures;
    if (violations.size() < kMaxWitnesses) violations.push_back({x, std::move(detail)});
  }

  void settle() {
    verdict = failures > 0 ? Verdict::Fail : checked > 0 ? Verdict::Pass : Verdict::Indeterminate;
  }

  static constexpr std::size_t kMaxWitnesses = 16;
};

namespace detail {

inline std::string set_string(const std::vector<u64>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

/// a^k if it is <= limit.
inline std::optional<u64> bounded_pow(u64 a, u64 k, u64 limit) {
  u128 acc = 1;
  for (u64 i = 0; i < k; ++i) {
    acc *= a;
    if (acc > limit) return std::nullopt;
  }
  return static_cast<u64>(acc);
}

}  // namespace detail

// --- item (1) ---------------------------------------------------------------

inline CheckResult check_fixed_one(const BijectionWindow& h) {
  CheckResult r{"h(1) = 1"};
  ++r.checked;
  if (h(1) != 1) r.fail(1, "h(1) = " + std::to_string(h(1)));
  r.settle();
  return r;
}

// --- item (2) ---------------------------------------------------------------

inline CheckResult check_primes_preserved(const BijectionWindow& h) {
  CheckResult r{"h(Pi) = Pi"};
  for (u64 x = 1; x <= h.size(); ++x) {
    const bool px = is_prime(x);
    const bool phx = is_prime(h(x));
    if (px || phx) ++r.checked;
    if (px && !phx) r.fail(x, "prime " + std::to_string(x) + " maps to non-prime " + std::to_string(h(x)));
    if (!px && phx) r.fail(x, "non-prime " + std::to_string(x) + " maps to prime " + std::to_string(h(x)));
  }
  // Primes q <= N with h^-1(q) outside the window: surjectivity onto them is unverified.
  for (u64 q : primes_up_to(h.size())) {
    if (!h.inverse(q)) ++r.indeterminate;
  }
  r.settle();
  return r;
}

// --- item (3) ---------------------------------------------------------------

inline CheckResult check_prime_divisor_equivariance(const BijectionWindow& h) {
  CheckResult r{"Pi_h(x) = h(Pi_x)"};
  for (u64 x = 1; x <= h.size(); ++x) {
    const auto px = prime_divisors(x);
    bool known = true;
    std::vector<u64> image;
    for (u64 p : px) {
      if (!h.in_window(p)) {
        known = false;
        break;
      }
      image.push_back(h(p));
    }
    if (!known) {
      ++r.indeterminate;
      continue;
    }
    std::sort(image.begin(), image.end());
    const auto phx = prime_divisors(h(x));
    ++r.checked;
    if (phx != image) {
      r.fail(x, "Pi_h(" + std::to_string(x) + ") = " + detail::set_string(phx) + " but h(Pi_" +
                    std::to_string(x) + ") = " + detail::set_string(image));
    }
  }
  r.settle();
  return r;
}

// --- item (4) ---------------------------------------------------------------

struct MonogenicCheck {
  CheckResult result;
  std::vector<std::optional<u64>> exponents;  // exponents[k-1]: e with h(a^k) = h(a)^e
};

inline MonogenicCheck check_monogenic(const BijectionWindow& h, u64 a, u64 max_power) {
  require(a >= 2, "monogenic: a must be >= 2");
  MonogenicCheck m{CheckResult{"h(a^N) = h(a)^N for a = " + std::to_string(a)}, {}};
  const u64 ha = h.in_window(a) ? h(a) : 0;
  for (u64 k = 1; k <= max_power; ++k) {
    const auto ak = detail::bounded_pow(a, k, h.size());
    if (!ak) {
      ++m.result.indeterminate;
      m.exponents.push_back(std::nullopt);
      continue;
    }
    ++m.result.checked;
    const u64 hak = h(*ak);
    const auto e = k == 1 ? std::optional<u64>{1} : exponent_of(ha, hak);
    m.exponents.push_back(e);
    if (!e) {
      m.result.fail(*ak, "h(" + std::to_string(*ak) + ") = " + std::to_string(hak) + " is not a power of h(" +
                             std::to_string(a) + ") = " + std::to_string(ha));
    }
  }
  m.result.settle();
  return m;
}

/// Partial multiplicative map n -> mu(n) read off h(a^n) = h(a)^mu(n).
struct MuTable {
  std::map<u64, u64> entries;
  bool multiplicative = true;     // mu(xy) = mu(x)mu(y) (coprime) and mu(p^k) = mu(p)^k where defined
  bool primes_to_primes = true;   // mu restricted to primes is injective into primes

  std::optional<u64> operator()(u64 n) const {
    auto it = entries.find(n);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }
};

struct MuExtraction {
  CheckResult result;
  MuTable table;
};

inline MuExtraction extract_mu(const BijectionWindow& h, const std::vector<u64>& bases, u64 max_power) {
  require(!bases.empty(), "extract_mu: need at least one base");
  for (u64 a : bases) {
    require(a >= 2 && !is_perfect_power(a), "extract_mu: bases must be >= 2 and not perfect powers");
  }
  MuExtraction out{CheckResult{"h(x^n) = h(x)^mu(n), mu multiplicative"}, {}};
  auto& table = out.table.entries;
  for (u64 a : bases) {
    if (!h.in_window(a)) {
      ++out.result.indeterminate;
      continue;
    }
    const u64 ha = h(a);
    for (u64 n = 1; n <= max_power; ++n) {
      const auto an = detail::bounded_pow(a, n, h.size());
      if (!an) {
        ++out.result.indeterminate;
        continue;
      }
      const auto e = exponent_of(ha, h(*an));
      if (!e) {
        throw NoExponent("extract_mu: h(" + std::to_string(*an) + ") = " + std::to_string(h(*an)) +
                         " is not a power of h(" + std::to_string(a) + ") = " + std::to_string(ha));
      }
      ++out.result.checked;
      auto [it, fresh] = table.emplace(n, *e);
      if (!fresh && it->second != *e) {
        out.result.fail(*an, "mu(" + std::to_string(n) + ") is " + std::to_string(it->second) + " from one base but " +
                                 std::to_string(*e) + " from base " + std::to_string(a));
      }
    }
  }

  auto mu = [&](u64 n) { return out.table(n); };
  for (const auto& [n, v] : table) {
    if (n == 1 && v != 1) {
      out.table.multiplicative = false;
      out.result.fail(1, "mu(1) = " + std::to_string(v));
    }
    for (const auto& [m, w] : table) {
      if (m < 2 || n < 2 || m > n || gcd(m, n) != 1) continue;
      const auto prod = mu(checked_mul(m, n));
      if (prod && *prod != checked_mul(v, w)) {
        out.table.multiplicative = false;
        out.result.fail(m * n, "mu(" + std::to_string(m * n) + ") != mu(" + std::to_string(m) + ")mu(" +
                                   std::to_string(n) + ")");
      }
    }
    if (auto pp = is_perfect_power(n); pp && is_prime(pp->base)) {
      const auto base = mu(pp->base);
      if (base) {
        u128 expect = 1;
        for (u64 i = 0; i < pp->exponent; ++i) expect *= *base;
        if (expect != v) {
          out.table.multiplicative = false;
          out.result.fail(n, "mu(" + std::to_string(n) + ") != mu(" + std::to_string(pp->base) + ")^" +
                                 std::to_string(pp->exponent));
        }
      }
    }
  }
  std::set<u64> prime_images;
  for (const auto& [n, v] : table) {
    if (!is_prime(n)) continue;
    if (!is_prime(v) || !prime_images.insert(v).second) out.table.primes_to_primes = false;
  }
  out.result.settle();
  return out;
}

// --- Brunault primes ---------------------------------------------------------

/// The first `count` primes p = 1 (mod b), p not dividing a, with
/// a^((p-1)/b) != 1 (mod p), for a prime b and a not a b-th power.
inline std::vector<u64> brunault_primes(u64 a, u64 b, u64 count, u64 search_bound) {
  require(is_prime(b), "brunault: b must be prime");
  require(a >= 2, "brunault: a must be >= 2");
  require(!is_kth_power(a, b), "brunault: a must not be a b-th power");
  std::vector<u64> out;
  for (u64 p = b + 1; p <= search_bound && out.size() < count; p += b) {
    if (!is_prime(p) || a % p == 0) continue;
    if (pow_mod(a, (p - 1) / b, p) != 1) out.push_back(p);
    if (p > kMaxU64 - b) break;
  }
  if (out.size() < count) {
    throw NotFoundWithinBound("brunault: found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                              " primes <= " + std::to_string(search_bound));
  }
  return out;
}

// --- the combined report -----------------------------------------------------

struct HomeoReport {
  std::vector<CheckResult> items;  // items (1) to (4)
  MuTable mu;
  bool all_passed = false;
  std::string note = "necessary conditions only: passing every check does not certify a homeomorphism";
};

/// Non-perfect-power bases a >= 2 with a^2 inside the window.
inline std::vector<u64> default_mu_bases(u64 n) {
  std::vector<u64> out;
  for (u64 a = 2; a <= n / a; ++a) {
    if (!is_perfect_power(a)) out.push_back(a);
  }
  return out;
}

inline HomeoReport run_all_checks(const BijectionWindow& h) {
  HomeoReport report;
  report.items.push_back(check_fixed_one(h));
  report.items.push_back(check_primes_preserved(h));
  report.items.push_back(check_prime_divisor_equivariance(h));

  CheckResult powers{"h(x^n) = h(x)^mu(n), mu multiplicative"};
  auto absorb = [&](const CheckResult& r) {
    powers.checked += r.checked;
    powers.failures += r.failures;
    for (const auto& w : r.violations) {
      if (powers.violations.size() < CheckResult::kMaxWitnesses) powers.violations.push_back(w);
    }
  };
  const auto bases = default_mu_bases(h.size());
  for (u64 a : bases) {
    u64 k = 1;
    while (detail::bounded_pow(a, k + 1, h.size())) ++k;
    absorb(check_monogenic(h, a, k).result);
  }
  if (powers.failures == 0 && !bases.empty()) {
    auto mu = extract_mu(h, bases, 64);
    report.mu = mu.table;
    absorb(mu.result);
    if (!mu.table.primes_to_primes) powers.fail(0, "mu does not map primes injectively to primes");
  }
  powers.settle();
  report.items.push_back(std::move(powers));

  report.all_passed = true;
  for (const auto& item : report.items) report.all_passed = report.all_passed && item.verdict == Verdict::Pass;
  return report;
}

}  // namespace golomb
