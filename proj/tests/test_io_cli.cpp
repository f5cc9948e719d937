#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "golomb/cli.hpp"

using namespace golomb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json payload() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(GOLOMB_SAMPLES_DIR) + "/" + name; }

const json& schema() {
  static const json s = [] {
    std::ifstream in(GOLOMB_SCHEMA_PATH);
    return json::parse(in);
  }();
  return s;
}

const json& resolve(const json& node) {
  if (!node.contains("$ref")) return node;
  const auto ref = node["$ref"].get<std::string>();
  return schema()["$defs"][ref.substr(std::string("#/$defs/").size())];
}

bool type_matches(const std::string& type, const json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer();
  if (type == "null") return v.is_null();
  return false;
}

// Validates against the keywords the payload schema uses; returns the first problem or "".
std::string validate(const json& raw, const json& v, const std::string& path) {
  const json& s = resolve(raw);
  if (s.contains("oneOf")) {
    int matches = 0;
    for (const auto& alt : s["oneOf"]) matches += validate(alt, v, path).empty();
    return matches == 1 ? "" : path + ": " + std::to_string(matches) + " oneOf branches match";
  }
  if (s.contains("const") && v != s["const"]) return path + ": expected " + s["const"].dump();
  if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) {
    return path + ": " + v.dump() + " not in enum";
  }
  if (s.contains("type") && !type_matches(s["type"], v)) return path + ": expected " + s["type"].get<std::string>();
  if (s.contains("minimum") && v.get<long long>() < s["minimum"].get<long long>()) return path + ": below minimum";
  if (v.is_object()) {
    for (const auto& r : s.value("required", json::array())) {
      if (!v.contains(r.get<std::string>())) return path + ": missing " + r.get<std::string>();
    }
    for (const auto& [k, child] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(k)) {
        if (auto e = validate(s["properties"][k], child, path + "." + k); !e.empty()) return e;
      } else if (s.value("additionalProperties", true) == false) {
        return path + ": unexpected key " + k;
      }
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return path + ": too few items";
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return path + ": too many items";
    const auto prefix = s.value("prefixItems", json::array());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string at = path + "[" + std::to_string(i) + "]";
      if (i < prefix.size()) {
        if (auto e = validate(prefix[i], v[i], at); !e.empty()) return e;
      } else if (s.contains("items")) {
        if (s["items"] == false) return at + ": unexpected item";
        if (auto e = validate(s["items"], v[i], at); !e.empty()) return e;
      }
    }
  }
  return "";
}

}  // namespace

TEST(Json, ProgressionRoundTrip) {
  const auto p = Progression::non_negative(4, 9);
  const json j = p;
  EXPECT_EQ(j, (json{{"a", 4}, {"b", 9}, {"carrier", "N0"}}));
  EXPECT_EQ(progression_from_json(j), p);
  EXPECT_EQ(progression_from_json(json(Progression::integer(-1, 4))), Progression::integer(3, 4));
}

TEST(Json, ClosureDescriptor) {
  const json j = closure(BasicOpen(2, 15));
  EXPECT_EQ(j, json::parse(R"({"a":2,"conditions":[[3,3],[5,5]]})"));
}

TEST(BijectionInput, JsonAndCsv) {
  const auto h = bijection_from_json(json::parse(R"({"n":3,"map":[1,3,2]})"));
  EXPECT_EQ(h(2), 3u);
  EXPECT_THROW(bijection_from_json(json::parse(R"({"n":4,"map":[1,3,2]})")), PreconditionViolation);
  const auto c = bijection_from_csv("x,h(x)\n# comment\n2,3\n1,1\n3,2\n");
  EXPECT_EQ(c.values(), (std::vector<u64>{1, 3, 2}));
  EXPECT_THROW(bijection_from_csv("1,1\n3,2\n"), PreconditionViolation);
  EXPECT_THROW(bijection_from_csv("1,1\n1,2\n"), PreconditionViolation);
  EXPECT_THROW(bijection_from_csv("1,1\nx,2\n"), PreconditionViolation);
}

TEST(Cli, ClosureExample) {
  const auto r = run({"closure", "--a", "2", "--b", "15", "--query", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.payload()["in_closure"], true);
  const auto o = run({"closure", "--a", "2", "--b", "15", "--query", "3", "--oracle-bound", "30"});
  EXPECT_EQ(o.payload()["in_closure"], false);
  EXPECT_EQ(o.payload()["oracle"], false);
}

TEST(Cli, X8Example) {
  const auto r = run({"x8-witness", "--b", "9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.payload()["x"], 22);
  EXPECT_EQ(r.payload()["check"], "22^8 ≡ 16 mod 9");
  const auto n = run({"x8-witness", "--b", "3", "--n", "2"});
  EXPECT_EQ(n.payload()["point"], 256);
}

TEST(Cli, HomeoCheckFiles) {
  const auto id = run({"homeo-check", "--file", sample("identity100.json")});
  ASSERT_EQ(id.code, kExitOk) << id.err;
  EXPECT_EQ(id.payload()["all_passed"], true);
  for (const auto& item : id.payload()["items"]) EXPECT_EQ(item["verdict"], "Pass");

  const auto swap = run({"homeo-check", "--file", sample("prime_swap100.json")});
  ASSERT_EQ(swap.code, kExitOk);
  EXPECT_EQ(swap.payload()["all_passed"], false);
  EXPECT_EQ(swap.payload()["items"][2]["verdict"], "Fail");
  EXPECT_EQ(swap.payload()["items"][2]["violations"][0]["x"], 4);

  const auto mult = run({"homeo-check", "--file", sample("multiplicative_swap100.csv")});
  ASSERT_EQ(mult.code, kExitOk) << mult.err;
  EXPECT_EQ(mult.payload()["all_passed"], true);
  EXPECT_NE(mult.payload()["note"].get<std::string>().find("necessary"), std::string::npos);

  EXPECT_EQ(run({"homeo-check", "--file", sample("missing.json")}).code, kExitPrecondition);
}

TEST(Cli, EverySubcommandProducesJson) {
  const std::vector<std::vector<std::string>> cases = {
      {"member", "--a", "2", "--b", "5", "--x", "12"},
      {"intersect", "--p", "1,4", "--p", "3,6"},
      {"least", "--p", "1,2", "--p", "2,3"},
      {"primes-in", "--a", "1", "--b", "10"},
      {"superconnect", "--piece", "0,1", "--open", "1,2", "--open", "2,3"},
      {"special1", "--x", "1", "--y", "5", "--q", "6", "--pi"},
      {"regular-nbhd", "--x", "7", "--b", "6"},
      {"nonregular", "--a", "1", "--b", "2", "--q", "3", "--c", "1", "--disconnect", "1,3"},
      {"progressive", "--values", "1,2,3,4"},
      {"successors", "--values", "1,2", "--count", "3", "--descend", "3"},
      {"poly-cont", "--coeffs", "1,1"},
      {"poly-cont", "--coeffs", "0,0,1", "--x", "3", "--b", "5"},
      {"half-square", "--b", "3"},
      {"frob", "--n", "0", "--a", "5"},
      {"family", "--n", "1", "--m", "2", "--window", "10000"},
      {"hensel", "--p", "7", "--k", "3"},
      {"homeo-check", "--identity", "30"},
      {"brunault", "--a", "2", "--b", "3"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    ASSERT_EQ(r.code, kExitOk) << args.front() << ": " << r.err;
    const auto j = r.payload();
    EXPECT_EQ(j.dump() + "\n", r.out) << args.front();  // payloads re-serialize identically
    EXPECT_EQ(json::parse(j.dump()), j);
  }
}

TEST(Cli, PayloadsConformToSchema) {
  const std::vector<std::vector<std::string>> cases = {
      {"closure", "--a", "2", "--b", "15"},
      {"closure", "--a", "2", "--b", "15", "--query", "3", "--oracle-bound", "15"},
      {"member", "--a", "3", "--b", "4", "--x", "7", "--carrier", "Z"},
      {"intersect", "--p", "1,4", "--p", "3,6"},
      {"intersect", "--p", "0,2", "--p", "1,4"},
      {"least", "--p", "1,2", "--p", "2,3"},
      {"least", "--p", "2,4", "--p", "3,4"},
      {"primes-in", "--a", "3", "--b", "8"},
      {"superconnect", "--piece", "0,4", "--piece", "1,6", "--open", "1,3"},
      {"special1", "--x", "1", "--y", "5", "--q", "6", "--pi"},
      {"special1", "--x", "1", "--y", "2", "--q", "3"},
      {"regular-nbhd", "--x", "3", "--b", "10"},
      {"nonregular", "--a", "1", "--b", "2", "--q", "3", "--c", "1"},
      {"nonregular", "--a", "1", "--b", "2", "--q", "3", "--c", "1", "--disconnect", "1,9"},
      {"progressive", "--values", "1,2,3,4"},
      {"progressive", "--values", "1,3"},
      {"progressive", "--values", "2,2", "--tree"},
      {"successors", "--values", "1,2", "--count", "3"},
      {"successors", "--values", "1", "--descend", "3"},
      {"poly-cont", "--coeffs", "1,1"},
      {"poly-cont", "--coeffs", "7"},
      {"poly-cont", "--coeffs", "0,0,1", "--x", "3", "--b", "5"},
      {"half-square", "--b", "9"},
      {"frob", "--n", "2", "--a", "5"},
      {"family", "--n", "2"},
      {"family", "--n", "1", "--m", "3", "--window", "1000"},
      {"hensel", "--p", "5", "--k", "4"},
      {"x8-witness", "--b", "15"},
      {"x8-witness", "--b", "3", "--n", "2"},
      {"homeo-check", "--identity", "50"},
      {"homeo-check", "--file", sample("prime_swap100.json")},
      {"homeo-check", "--file", sample("multiplicative_swap100.csv")},
      {"brunault", "--a", "2", "--b", "5", "--count", "3"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    ASSERT_EQ(r.code, kExitOk) << args.front() << ": " << r.err;
    const auto& def = schema()["$defs"][args.front()];
    ASSERT_FALSE(def.is_null()) << args.front();
    EXPECT_EQ(validate(def, r.payload(), args.front()), "") << r.out;
  }
}

TEST(Cli, SchemaCoversEverySubcommand) {
  std::size_t listed = 0;
  for (const auto& alt : schema()["oneOf"]) {
    const auto ref = alt["$ref"].get<std::string>();
    EXPECT_TRUE(schema()["$defs"].contains(ref.substr(8))) << ref;
    ++listed;
  }
  EXPECT_EQ(listed, 19u);
}

TEST(Cli, SelectedValues) {
  EXPECT_EQ(run({"intersect", "--p", "1,4", "--p", "3,6"}).payload()["intersection"],
            json::parse(R"({"a":9,"b":12,"carrier":"Z"})"));
  EXPECT_EQ(run({"least", "--p", "2,4", "--p", "3,4"}).payload()["least"], nullptr);
  EXPECT_EQ(run({"special1", "--x", "1", "--y", "5", "--q", "6"}).payload()["n"], 3);
  EXPECT_EQ(run({"superconnect", "--piece", "0,1", "--open", "1,2", "--open", "2,3"}).payload()["point"], 6);
  EXPECT_EQ(run({"nonregular", "--a", "2", "--b", "3", "--q", "5", "--c", "1"}).payload()["point"], 5);
  EXPECT_EQ(run({"successors", "--values", "1,2", "--count", "2"}).payload()["successors"], json::parse("[3,9]"));
  EXPECT_EQ(run({"poly-cont", "--coeffs", "0,3,1"}).payload()["verdict"], "ContinuousA0Zero");
  EXPECT_EQ(run({"brunault", "--a", "3", "--b", "2", "--count", "1"}).payload()["primes"], json::parse("[5]"));
  EXPECT_EQ(run({"hensel", "--p", "3", "--k", "2"}).payload()["root"], 4);
}

TEST(Cli, DescentIsSeeded) {
  const std::vector<std::string> base{"successors", "--values", "1", "--descend", "5"};
  auto with_seed = [&](const std::string& s) {
    auto args = base;
    args.insert(args.begin(), {"--seed", s});
    return run(args).payload()["descent"];
  };
  EXPECT_EQ(with_seed("7"), with_seed("7"));
  EXPECT_EQ(run(base).payload()["seed"], 0);
}

TEST(Cli, TextFormat) {
  const auto r = run({"--format", "text", "x8-witness", "--b", "9"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("x: 22\n"), std::string::npos);
  EXPECT_NE(r.out.find("check: 22^8 ≡ 16 mod 9\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"half-square", "--b", "2"}).code, kExitPrecondition);
  EXPECT_EQ(run({"closure", "--a", "2", "--b", "4"}).code, kExitPrecondition);
  EXPECT_EQ(run({"frob", "--n", "1", "--a", "2"}).code, kExitPrecondition);
  EXPECT_EQ(run({"poly-cont", "--coeffs", "-1,1"}).code, kExitPrecondition);
  EXPECT_EQ(run({"primes-in", "--a", "1", "--b", "10", "--bound", "10"}).code, kExitNotFound);
  EXPECT_EQ(run({"brunault", "--a", "3", "--b", "2", "--count", "50", "--bound", "100"}).code, kExitNotFound);
  EXPECT_EQ(run({"superconnect", "--piece", "0,4", "--open", "1,3", "--window", "11"}).code, kExitNotFound);
  EXPECT_EQ(run({"hensel", "--p", "3", "--k", "50"}).code, kExitPrecondition);  // 3^50 overflows
}

TEST(Cli, UsageErrorsPrintSynopsis) {
  const auto missing = run({"closure", "--a", "2"});
  EXPECT_EQ(missing.code, kExitPrecondition);
  EXPECT_NE(missing.err.find("--b"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitPrecondition);
  EXPECT_EQ(run({"no-such-command"}).code, kExitPrecondition);
  EXPECT_EQ(run({"--format", "yaml", "closure", "--a", "1", "--b", "1"}).code, kExitPrecondition);
}
