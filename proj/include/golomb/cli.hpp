#pragma once

// The `golomb` command line: one subcommand per operation, JSON or text output.
//
// Exit status: 0 success, 1 internal error, 2 usage error or violated
// precondition, 3 nothing found within the search bound or window.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "golomb/golomb.hpp"

namespace golomb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitNotFound = 3;

namespace cli_detail {

/// "a,b" or "a,b,N0" or "a,b,Z".
inline Progression parse_progression(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  require(parts.size() == 2 || parts.size() == 3, "progression \"" + text + "\" must be a,b or a,b,N0|Z");
  i64 a = 0;
  u64 b = 0;
  try {
    a = std::stoll(parts[0]);
    b = std::stoull(parts[1]);
  } catch (const std::logic_error&) {
    throw PreconditionViolation("progression \"" + text + "\": a and b must be integers");
  }
  if (parts.size() == 3 && parts[2] == "Z") return Progression::integer(a, b);
  require(parts.size() == 2 || parts[2] == "N0", "progression \"" + text + "\": carrier must be N0 or Z");
  return Progression::non_negative(a, b);
}

inline BasicOpen parse_open(const std::string& text) {
  const auto p = parse_progression(text);
  require(p.carrier() == Carrier::NonNegative && p.residue() >= 1, "basic open \"" + text + "\" needs a >= 1");
  return BasicOpen(static_cast<u64>(p.residue()), p.modulus());
}

inline void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

inline BijectionWindow load_bijection(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "homeo-check: cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw PreconditionViolation("homeo-check: " + path + " is not valid JSON: " + e.what());
    }
    return bijection_from_json(j);
  }
  return bijection_from_csv(text);
}

}  // namespace cli_detail

/// Runs one command; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the Golomb topology on the positive integers", "golomb"};
  app.require_subcommand(1);
  std::string format = "json";
  u64 seed = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for randomized choices");

  u64 a = 0, b = 0, x = 0, y = 0, q = 0, c = 0, n = 0, m = 0, k = 0, p = 0;
  u64 window = 0, bound = 0, count = 0, descend = 0, oracle_bound = 0, identity = 0;
  std::string carrier = "N0", file, disconnect;
  std::vector<std::string> progs, opens;
  std::vector<u64> values;
  std::vector<i64> coeffs;
  bool tree = false, with_pi = false;

  auto* closure_cmd = app.add_subcommand("closure", "closure of the basic open a+bN0");
  closure_cmd->add_option("--a", a)->required();
  closure_cmd->add_option("--b", b)->required();
  auto* query_opt = closure_cmd->add_option("--query", x, "test membership of this point");
  closure_cmd->add_option("--oracle-bound", oracle_bound, "also run the brute-force oracle up to this modulus");

  auto* member_cmd = app.add_subcommand("member", "membership of x in a+bN0 or a+bZ");
  member_cmd->add_option("--a", a)->required();
  member_cmd->add_option("--b", b)->required();
  member_cmd->add_option("--x", x)->required();
  member_cmd->add_option("--carrier", carrier)->check(CLI::IsMember({"N0", "Z"}));

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of progressions a,b[,N0|Z]");
  intersect_cmd->add_option("--p", progs)->required();

  auto* least_cmd = app.add_subcommand("least", "least positive element of an intersection");
  least_cmd->add_option("--p", progs)->required();

  auto* primes_cmd = app.add_subcommand("primes-in", "least prime in a+bN0");
  primes_cmd->add_option("--a", a)->required();
  primes_cmd->add_option("--b", b)->required();
  bound = 1'000'000;
  primes_cmd->add_option("--bound", bound);

  auto* super_cmd = app.add_subcommand("superconnect", "common closure point of open traces on X");
  super_cmd->add_option("--piece", progs, "piece a,b of X (first piece a = 0)")->required();
  super_cmd->add_option("--open", opens, "basic open a,b")->required();
  window = 0;
  super_cmd->add_option("--window", window);

  auto* special1_cmd = app.add_subcommand("special1", "neighbourhoods of x and y whose closures meet in qN");
  special1_cmd->add_option("--x", x)->required();
  special1_cmd->add_option("--y", y)->required();
  special1_cmd->add_option("--q", q)->required();
  special1_cmd->add_option("--window", window);
  special1_cmd->add_flag("--pi", with_pi, "also recover the prime divisors of x from the filter");

  auto* regular_cmd = app.add_subcommand("regular-nbhd", "neighbourhood of x for the prime radical b");
  regular_cmd->add_option("--x", x)->required();
  regular_cmd->add_option("--b", b)->required();
  regular_cmd->add_option("--window", window);

  auto* nonreg_cmd = app.add_subcommand("nonregular", "non-regularity witness in a+bN0");
  nonreg_cmd->add_option("--a", a)->required();
  nonreg_cmd->add_option("--b", b)->required();
  nonreg_cmd->add_option("--q", q)->required();
  nonreg_cmd->add_option("--c", c)->required();
  nonreg_cmd->add_option("--window", window);
  nonreg_cmd->add_option("--disconnect", disconnect, "x,y in a+bN0 to separate by a clopen partition");

  auto* prog_cmd = app.add_subcommand("progressive", "check f(1..n) for the progressive property");
  prog_cmd->add_option("--values", values)->required()->delimiter(',');
  prog_cmd->add_flag("--tree", tree, "also require strictly increasing values");

  auto* succ_cmd = app.add_subcommand("successors", "extensions of an increasing progressive prefix");
  succ_cmd->add_option("--values", values)->required()->delimiter(',');
  count = 10;
  succ_cmd->add_option("--count", count);
  succ_cmd->add_option("--descend", descend, "random descent depth (uses --seed)");

  auto* poly_cmd = app.add_subcommand("poly-cont", "continuity of an integer polynomial a0,a1,...");
  poly_cmd->add_option("--coeffs", coeffs)->required()->delimiter(',');
  auto* poly_x = poly_cmd->add_option("--x", x, "certify continuity at x");
  poly_cmd->add_option("--b", b, "target neighbourhood modulus for --x");
  poly_cmd->add_option("--window", window);

  auto* half_cmd = app.add_subcommand("half-square", "discontinuity witness for (x+x^2)/2 at 2");
  half_cmd->add_option("--b", b)->required();

  auto* frob_cmd = app.add_subcommand("frob", "closedness certificate for {x^2+nx}");
  frob_cmd->add_option("--n", n)->required();
  frob_cmd->add_option("--a", a)->required();
  frob_cmd->add_option("--bound", bound);
  frob_cmd->add_option("--window", window);

  auto* family_cmd = app.add_subcommand("family", "member X_n of the disjoint superconnected family");
  family_cmd->add_option("--n", n)->required();
  auto* family_m = family_cmd->add_option("--m", m, "also compare with X_m");
  family_cmd->add_option("--window", window);

  auto* hensel_cmd = app.add_subcommand("hensel", "root of x^8 = 16 modulo p^k");
  hensel_cmd->add_option("--p", p)->required();
  hensel_cmd->add_option("--k", k)->required();

  auto* x8_cmd = app.add_subcommand("x8-witness", "point of X_8 in the neighbourhood 16+bN0");
  x8_cmd->add_option("--b", b)->required();
  auto* x8_n = x8_cmd->add_option("--n", n, "use X_8n and the point 16^n");

  auto* homeo_cmd = app.add_subcommand("homeo-check", "necessary conditions for a homeomorphism");
  auto* file_opt = homeo_cmd->add_option("--file", file, "JSON {\"n\",\"map\"} or CSV x,h(x)");
  auto* ident_opt = homeo_cmd->add_option("--identity", identity, "check the identity on [1,N]");
  file_opt->excludes(ident_opt);

  auto* brunault_cmd = app.add_subcommand("brunault", "primes p = 1 mod b with a not a b-th power mod p");
  brunault_cmd->add_option("--a", a)->required();
  brunault_cmd->add_option("--b", b)->required();
  brunault_cmd->add_option("--count", count);
  brunault_cmd->add_option("--bound", bound);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    err << "error: " << e.what() << '\n' << (subs.empty() ? app.help() : subs.front()->help());
    return kExitPrecondition;
  }

  json payload;
  try {
    if (*closure_cmd) {
      const BasicOpen u(a, b);
      const auto d = closure(u);
      payload = {{"open", u}, {"closure", d}};
      if (*query_opt) {
        payload["query"] = x;
        payload["in_closure"] = d.contains(x);
        if (oracle_bound > 0) payload["oracle"] = in_closure_oracle(x, u, oracle_bound);
      }
    } else if (*member_cmd) {
      require(a <= static_cast<u64>(kMaxI64), "member: a is out of range");
      const auto pr = carrier == "Z" ? Progression::integer(static_cast<i64>(a), b)
                                     : Progression::non_negative(static_cast<i64>(a), b);
      payload = {{"progression", pr}, {"x", x}, {"member", pr.contains(x)}};
    } else if (*intersect_cmd || *least_cmd) {
      ProgressionSystem sys;
      for (const auto& s : progs) sys.constraints.push_back(cli_detail::parse_progression(s));
      if (*intersect_cmd) {
        const auto i = intersect(sys);
        payload = {{"consistent", crt_consistent(sys)}, {"intersection", i ? json(*i) : json(nullptr)}};
      } else {
        const auto e = least_element(sys);
        payload = {{"least", e ? json(*e) : json(nullptr)}};
      }
    } else if (*primes_cmd) {
      const auto pr = least_prime_in_progression(a, b, bound);
      if (!pr) {
        throw NotFoundWithinBound("primes-in: no prime in " + std::to_string(a) + "+" + std::to_string(b) +
                                  "N0 up to " + std::to_string(bound));
      }
      payload = {{"prime", *pr}, {"bound", bound}};
    } else if (*super_cmd) {
      std::vector<Progression> pieces;
      std::vector<BasicOpen> us;
      for (const auto& s : progs) pieces.push_back(cli_detail::parse_progression(s));
      for (const auto& s : opens) us.push_back(cli_detail::parse_open(s));
      const u64 w = window ? window : 1'000'000;
      payload = superconnected_witness(pieces, us, w);
      payload["f0_base_element"] = f0_base_element(us);
      payload["window"] = w;
    } else if (*special1_cmd) {
      payload = special1_witness(x, y, q, window);
      if (with_pi) payload["pi_x"] = pi_via_filter(x, x);
    } else if (*regular_cmd) {
      payload = regular_neighborhood_for_prime(x, b, window ? window : 10'000);
    } else if (*nonreg_cmd) {
      payload = nonregularity_witness(a, b, q, c, window ? window : 1'000'000);
      if (!disconnect.empty()) {
        const auto pr = cli_detail::parse_progression(disconnect);
        require(pr.residue() >= 1, "nonregular: --disconnect needs x,y >= 1");
        const u64 dx = static_cast<u64>(pr.residue()), dy = pr.modulus();
        const u64 dn = disconnection_witness(a, b, dx, dy);
        payload["disconnection"] = {{"x", dx}, {"y", dy}, {"n", dn}, {"modulus", checked_pow(b, dn)}};
      }
    } else if (*prog_cmd) {
      payload = is_progressive(values, tree);
    } else if (*succ_cmd) {
      payload = {{"prefix", values}, {"successors", enumerate_successors(values, count)}};
      if (descend > 0) {
        std::mt19937_64 rng(seed);
        std::vector<u64> path = values;
        for (u64 step = 0; step < descend; ++step) {
          const auto next = enumerate_successors(path, std::max<u64>(count, 1));
          path.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
        }
        payload["descent"] = path;
        payload["seed"] = seed;
      }
    } else if (*poly_cmd) {
      const IntPolynomial f(coeffs);
      payload = polynomial_continuity(f, window ? window : 100);
      if (*poly_x) {
        require(b >= 1, "poly-cont: --x needs --b >= 1");
        require(payload["verdict"] != "Discontinuous", "poly-cont: certificates exist only when a0 = 0");
        payload["certificate"] = continuity_certificate(f, x, b, window ? window : checked_add(x, checked_mul(10, b)));
      }
    } else if (*half_cmd) {
      const auto w = half_square_discontinuity_witness(b);
      payload = w;
      payload["b"] = b;
    } else if (*frob_cmd) {
      payload = frob_closedness_certificate(n, a, *frob_cmd->get_option("--bound") ? bound : 10'000,
                                            window ? window : 10'000);
    } else if (*family_cmd) {
      payload = {{"member", disjoint_family_member(n)}};
      if (*family_m) payload["disjointness"] = verify_family_disjoint(n, m, window ? window : 1'000'000);
    } else if (*hensel_cmd) {
      const u64 r = hensel_lift(p, k);
      const u64 pk = checked_pow(p, k);
      payload = HenselRoot{p, k, pk, r};
      payload["check"] = std::to_string(r) + "^8 ≡ 16 mod " + std::to_string(pk);
    } else if (*x8_cmd) {
      if (*x8_n) {
        payload = x8n_closure_witness(n, b);
      } else {
        payload = closure_point_witness_x8(b);
      }
      payload["sixteen_not_in_x8"] = wang_no_integer_solution();
    } else if (*homeo_cmd) {
      require(!file.empty() || identity > 0, "homeo-check: give --file or --identity N");
      const auto h = file.empty() ? BijectionWindow::identity(identity) : cli_detail::load_bijection(file);
      payload = run_all_checks(h);
      payload["n"] = h.size();
    } else if (*brunault_cmd) {
      const u64 cnt = *brunault_cmd->get_option("--count") ? count : 5;
      const u64 bd = *brunault_cmd->get_option("--bound") ? bound : 100'000;
      payload = {{"a", a}, {"b", b}, {"primes", brunault_primes(a, b, cnt, bd)}, {"bound", bd}};
    }
  } catch (const NotFoundWithinBound& e) {
    err << "not found: " << e.what() << '\n';
    return kExitNotFound;
  } catch (const PreconditionViolation& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const json::exception& e) {
    err << "precondition: malformed input: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  if (format == "text") {
    cli_detail::render_text(payload, "", out);
  } else {
    out << payload.dump() << '\n';
  }
  return kExitOk;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace golomb
