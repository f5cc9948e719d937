#pragma once

// JSON forms of the library's values and proof records, and the two input
// formats for bijection windows: {"n": N, "map": [h(1), ..., h(N)]} and CSV
// lines "x,h(x)".

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "golomb/homeo.hpp"
#include "golomb/maps.hpp"
#include "golomb/progression.hpp"
#include "golomb/special_sets.hpp"
#include "golomb/topology.hpp"

namespace golomb {

using json = nlohmann::json;

inline void to_json(json& j, const Progression& p) {
  j = json{{"a", p.residue()}, {"b", p.modulus()}, {"carrier", p.carrier() == Carrier::Integer ? "Z" : "N0"}};
}

inline Progression progression_from_json(const json& j) {
  const auto carrier = j.value("carrier", std::string("N0"));
  const i64 a = j.at("a").get<i64>();
  const u64 b = j.at("b").get<u64>();
  if (carrier == "Z") return Progression::integer(a, b);
  require(carrier == "N0", "progression carrier must be \"N0\" or \"Z\"");
  return Progression::non_negative(a, b);
}

inline void to_json(json& j, const BasicOpen& u) { j = json{{"a", u.a()}, {"b", u.b()}}; }

inline void to_json(json& j, const ClosureDescriptor& d) {
  json conds = json::array();
  for (const auto& c : d.conditions) conds.push_back({c.prime, c.prime_power});
  j = json{{"a", d.base}, {"conditions", conds}};
}

inline void to_json(json& j, const Factorization& f) {
  j = json::array();
  for (const auto& pp : f.pairs()) j.push_back({pp.prime, pp.exponent});
}

inline void to_json(json& j, const SuperconnectWitness& w) {
  j = json{{"point", w.point}, {"refined_moduli", w.refined_moduli}, {"primes", w.primes}};
}

inline void to_json(json& j, const Special1Witness& w) {
  j = json{{"n", w.n}, {"modulus", w.modulus}, {"ux", w.ux}, {"uy", w.uy}, {"window", w.window},
           {"window_bounded", true}};
}

inline void to_json(json& j, const RegularNeighborhood& r) {
  j = json{{"n", r.n}, {"modulus", r.modulus}, {"window", r.window}, {"primes_checked", r.primes_checked},
           {"window_bounded", true}};
}

inline void to_json(json& j, const NonregularityWitness& w) {
  j = json{{"point", w.point}, {"w_modulus", w.w_modulus}, {"v_modulus", w.v_modulus}};
}

inline const char* to_string(ProgressiveCondition c) {
  switch (c) {
    case ProgressiveCondition::PrimeDivisors: return "prime_divisors";
    case ProgressiveCondition::Divisibility: return "divisibility";
    case ProgressiveCondition::NotIncreasing: return "not_increasing";
  }
  return "?";
}

inline void to_json(json& j, const ProgressiveCheck& c) {
  j = json{{"progressive", static_cast<bool>(c)}};
  if (c.violation) {
    j["violation"] = {{"condition", to_string(c.violation->condition)}, {"x", c.violation->x}, {"y", c.violation->y}};
  } else {
    j["violation"] = nullptr;
  }
}

inline void to_json(json& j, const ContinuityCertificate& c) {
  j = json{{"d", c.d}, {"removed", c.removed}, {"window", c.window}, {"points_checked", c.points_checked},
           {"window_bounded", true}};
}

inline const char* to_string(PolynomialVerdictKind k) {
  switch (k) {
    case PolynomialVerdictKind::ContinuousA0Zero: return "ContinuousA0Zero";
    case PolynomialVerdictKind::ContinuousConstant: return "ContinuousConstant";
    case PolynomialVerdictKind::Discontinuous: return "Discontinuous";
  }
  return "?";
}

inline void to_json(json& j, const SplitWitness& w) {
  j = json{{"x", w.x},
           {"fx", w.fx},
           {"a0", w.a0},
           {"p", w.p},
           {"superconnected_set", {{"multiples", {{"a", w.p}, {"b", w.p}}}, {"shifted", {{"a", w.x}, {"b", w.p}}}}},
           {"U", {{"residue", w.u_residue}, {"modulus", w.p}, {"points", w.u_points}}},
           {"V", {{"residue", w.v_residue}, {"modulus", w.p}, {"points", w.v_points}}},
           {"window", w.window},
           {"window_bounded", true}};
}

inline void to_json(json& j, const PolynomialVerdict& v) {
  j = json{{"verdict", to_string(v.kind)}};
  j["witness"] = v.split ? json(*v.split) : json(nullptr);
}

inline void to_json(json& j, const HalfSquareWitness& w) {
  j = json{{"point", w.point}, {"image", w.image}};
}

inline void to_json(json& j, const FrobCertificate& c) {
  j = json{{"p", c.p}, {"window", c.window}, {"members_checked", c.members_checked}, {"window_bounded", true}};
}

inline void to_json(json& j, const FamilyMember& m) {
  j = json{{"n", m.n}, {"p", m.p}, {"preimage", {m.multiples, m.shifted}}};
}

inline void to_json(json& j, const FamilyDisjointness& d) {
  j = json{{"disjoint", d.disjoint},
           {"common", d.common ? json(*d.common) : json(nullptr)},
           {"members_scanned", d.members_scanned},
           {"y_upper", d.y_upper},
           {"y_lower", d.y_lower},
           {"margin", d.y_lower - d.y_upper},
           {"bounds_contradict", d.bounds_contradict}};
}

inline void to_json(json& j, const HenselRoot& r) {
  j = json{{"p", r.prime}, {"k", r.exponent}, {"modulus", r.modulus}, {"root", r.root}};
}

inline void to_json(json& j, const X8Witness& w) {
  j = json{{"x", w.x},
           {"b", w.b},
           {"residue", w.residue},
           {"roots", w.roots},
           {"check", std::to_string(w.x) + "^8 ≡ 16 mod " + std::to_string(w.b)}};
}

inline void to_json(json& j, const WangBracket& w) {
  j = json{{"lower", w.lower}, {"lower_power", w.lower_power}, {"upper", w.upper}, {"upper_power", w.upper_power}};
}

inline void to_json(json& j, const X8nWitness& w) {
  j = json{{"n", w.n},
           {"point", w.point},
           {"x", w.x},
           {"exponent", w.exponent},
           {"b", w.b},
           {"image_residue", w.image_residue},
           {"point_residue", w.point_residue},
           {"point_as_power", {{"base", w.point_as_power.base}, {"exponent", w.point_as_power.exponent}}},
           {"check", std::to_string(w.x) + "^" + std::to_string(w.exponent) + " ≡ 16^" + std::to_string(w.n) +
                         " mod " + std::to_string(w.b)}};
}

inline void to_json(json& j, const Witness& w) { j = json{{"x", w.x}, {"detail", w.detail}}; }

inline void to_json(json& j, const CheckResult& r) {
  j = json{{"item", r.item},
           {"verdict", to_string(r.verdict)},
           {"violations", r.violations},
           {"failures", r.failures},
           {"checked", r.checked},
           {"indeterminate", r.indeterminate}};
}

inline void to_json(json& j, const MuTable& m) {
  json entries = json::array();
  for (const auto& [n, v] : m.entries) entries.push_back({n, v});
  j = json{{"entries", entries}, {"multiplicative", m.multiplicative}, {"primes_to_primes", m.primes_to_primes}};
}

inline void to_json(json& j, const HomeoReport& r) {
  j = json{{"items", r.items}, {"mu", r.mu}, {"all_passed", r.all_passed}, {"note", r.note}};
}

// --- bijection windows -----------------------------------------------------

inline BijectionWindow bijection_from_json(const json& j) {
  require(j.is_object() && j.contains("map"), "bijection JSON needs a \"map\" array");
  auto values = j.at("map").get<std::vector<u64>>();
  if (j.contains("n")) {
    require(j.at("n").get<u64>() == values.size(), "bijection JSON: \"n\" must equal the length of \"map\"");
  }
  return BijectionWindow(std::move(values));
}

/// Lines "x,h(x)"; blank lines and lines starting with '#' are skipped, as is
/// a non-numeric header line. The pairs must cover [1, N] exactly once.
inline BijectionWindow bijection_from_csv(std::string_view text) {
  std::vector<std::pair<u64, u64>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    require(comma != std::string::npos, "bijection CSV: expected \"x,h(x)\" but got \"" + line + "\"");
    try {
      std::size_t used_x = 0, used_h = 0;
      const std::string xs = line.substr(0, comma), hs = line.substr(comma + 1);
      const u64 x = std::stoull(xs, &used_x);
      const u64 hx = std::stoull(hs, &used_h);
      pairs.emplace_back(x, hx);
    } catch (const std::logic_error&) {
      require(first, "bijection CSV: malformed line \"" + line + "\"");
    }
    first = false;
  }
  std::vector<u64> values(pairs.size(), 0);
  for (const auto& [x, hx] : pairs) {
    require(x >= 1 && x <= pairs.size(), "bijection CSV: x values must cover [1, N]");
    require(values[x - 1] == 0, "bijection CSV: x = " + std::to_string(x) + " given twice");
    values[x - 1] = hx;
  }
  return BijectionWindow(std::move(values));
}

}  // namespace golomb
