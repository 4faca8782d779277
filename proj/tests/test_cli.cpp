#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json_out.hpp"

using sailkit::cli::json;

namespace {

// Validator for the JSON Schema keywords the published schema uses: type,
// required, properties, items, enum, const, pattern, minimum, allOf,
// if/then and local $ref.
class SchemaChecker {
 public:
  explicit SchemaChecker(json root) : root_(std::move(root)) {}

  std::vector<std::string> check(const json& doc) {
    errors_.clear();
    validate(root_, doc, "$");
    return errors_;
  }

 private:
  const json& resolve(const json& s) {
    if (!s.contains("$ref")) return s;
    std::string ref = s["$ref"];
    const std::string prefix = "#/$defs/";
    REQUIRE(ref.rfind(prefix, 0) == 0);
    return resolve(root_["$defs"][ref.substr(prefix.size())]);
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  bool matches(const json& schema, const json& v) {
    auto saved = errors_;
    validate(schema, v, "");
    bool ok = errors_.size() == saved.size();
    errors_ = std::move(saved);
    return ok;
  }

  void validate(const json& raw, const json& v, const std::string& path) {
    const json& s = resolve(raw);
    auto err = [&](const std::string& m) { errors_.push_back(path + ": " + m); };
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) return err("expected type " + s["type"].dump());
    }
    if (s.contains("const") && v != s["const"]) err("expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) err("value " + v.dump() + " not in enum");
    }
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      err("string " + v.dump() + " does not match " + s["pattern"].get<std::string>());
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) err("below minimum");
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) err("missing key " + k.get<std::string>());
      if (s.contains("properties"))
        for (const auto& [k, sub] : s["properties"].items())
          if (v.contains(k)) validate(sub, v[k], path + "." + k);
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) validate(s["items"], v[i], path + "[" + std::to_string(i) + "]");
    if (s.contains("allOf"))
      for (const auto& sub : s["allOf"]) validate(sub, v, path);
    if (s.contains("if") && s.contains("then") && matches(s["if"], v)) validate(s["then"], v, path);
  }

  json root_;
  std::vector<std::string> errors_;
};

json load_schema() {
  std::ifstream in(SAILKIT_SCHEMA_PATH);
  REQUIRE(in.good());
  return json::parse(in);
}

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = sailkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& name) { return std::string(SAILKIT_GOLDEN_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares with the golden file; SAILKIT_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& got) {
  std::string path = golden_path(name);
  if (const char* u = std::getenv("SAILKIT_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path, std::ios::binary) << got;
    return;
  }
  std::string want = read_file(path);
  INFO("golden file " << path);
  REQUIRE(!want.empty());
  CHECK(got == want);
}

struct Case {
  std::string name;
  std::vector<std::string> args;
};

const std::vector<Case>& json_cases() {
  static const std::vector<Case> cases = {
      {"invariant_length", {"invariant", "length", "--a", "0,0", "--b", "6,9"}},
      {"invariant_sine", {"invariant", "sine", "--ray1", "1,0", "--ray2", "5,7"}},
      {"invariant_area", {"invariant", "area", "--a", "0,0", "--b", "2,0", "--c", "0,3"}},
      {"invariant_distance", {"invariant", "distance", "--point", "1,2,3", "--subspace", "0,0,0;1,0,0;0,1,0"}},
      {"invariant_simplex", {"invariant", "simplex", "--simplex", "0,0,0;1,0,0;0,1,0;1,1,2"}},
      {"empty_simplices", {"empty-simplices", "--max-volume", "3"}},
      {"cf_expand", {"cf", "expand", "--value", "7/5", "--parity", "odd"}},
      {"cf_expand_cubic", {"cf", "expand", "--value", "x^3-2", "--terms", "12"}},
      {"cf_eval", {"cf", "eval", "--cf", "[1;2,2]", "--convergents", "3"}},
      {"cf_eval_periodic", {"cf", "eval", "--cf", "[2;(1,4)]"}},
      {"cf_quadratic", {"cf", "quadratic", "--poly", "x^2-3"}},
      {"angle_lls", {"angle", "lls", "--ray1", "1,0", "--ray2", "5,7"}},
      {"angle_lls_golden", {"angle", "lls", "--ray1", "1,0", "--slope", "x^2-x-1"}},
      {"angle_itan", {"angle", "itan", "--ray1", "1,0", "--ray2", "5,7"}},
      {"angle_trig", {"angle", "trig", "--vertex", "1,1", "--ray1", "2,1", "--ray2", "4,8"}},
      {"angle_sail", {"angle", "sail", "--ray1", "1,0", "--ray2", "5,7"}},
      {"klein_2d", {"klein", "--generators", "1,0;2,5"}},
      {"klein_3d", {"klein", "--generators", "1,0,0;0,1,0;1,2,5"}},
      {"mv", {"mv", "--basis", "2,1;1,3", "--window", "8"}},
      {"algebraic_2d", {"algebraic", "--matrix", "2,1;1,1", "--window", "40"}},
      {"algebraic_3d", {"algebraic", "--matrix", "0,0,-1;1,0,3;0,1,0"}},
      {"markov", {"markov", "--form", "1,-1", "--form", "1,2", "--bound", "20"}},
      {"markov_golden", {"markov", "--field", "x^2-x-1", "--form", "1,-t", "--form", "1,t-1", "--bound", "30"}},
      {"stats_gk", {"stats", "gk", "--k", "1"}},
      {"stats_empirical", {"stats", "empirical", "--qmax", "60"}},
      {"stats_face_census", {"stats", "face-census", "--dim", "3", "--gen-bound", "3", "--samples", "12", "--seed", "7"}},
      {"stats_cross_ratio", {"stats", "cross-ratio", "--points", "-1,0,1,inf"}},
      {"stats_telescoping", {"stats", "telescoping", "--K", "1000"}},
      {"jp_pure_cubic", {"jp", "--field", "x^3-2", "--y", "t-1", "--z", "t^2-1", "--max-steps", "50", "--reconstruct", "20"}},
      {"jp_rational", {"jp", "--y", "3/7", "--z", "5/11", "--reconstruct", "3"}},
  };
  return cases;
}

}  // namespace

TEST_CASE("cli: examples") {
  auto r = run({"angle", "lls", "--ray1", "1,0", "--ray2", "5,7"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["schema"] == "sailkit/1");
  CHECK(doc["result"]["lls"] == json::array({1, 2, 2}));

  r = run({"klein", "--generators", "1,0,0;0,1,0;0,0,1", "--off"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "OFF\n3 1 0\n0 0 1\n0 1 0\n1 0 0\n3 0 1 2\n");

  r = run({"stats", "gk", "--k", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["probability"].get<std::string>().rfind("0.415037", 0) == 0);
  CHECK(r.err.empty());
}

TEST_CASE("cli: golden json output validates against the schema") {
  SchemaChecker checker(load_schema());
  for (const auto& c : json_cases()) {
    CAPTURE(c.name);
    auto r = run(c.args);
    INFO(r.err);
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    check_golden(c.name + ".json", r.out);
    json doc = json::parse(r.out);
    auto errors = checker.check(doc);
    for (const auto& e : errors) INFO(e);
    CHECK(errors.empty());
  }
}

TEST_CASE("cli: schema rejects malformed documents") {
  SchemaChecker checker(load_schema());
  auto doc = json::parse(run({"angle", "lls", "--ray1", "1,0", "--ray2", "5,7"}).out);
  CHECK(checker.check(doc).empty());
  auto bad = doc;
  bad["schema"] = "sailkit/0";
  CHECK(!checker.check(bad).empty());
  bad = doc;
  bad["result"].erase("lls");
  CHECK(!checker.check(bad).empty());
  bad = doc;
  bad["result"]["lls"][0] = 1.5;
  CHECK(!checker.check(bad).empty());
  bad = doc;
  bad["command"] = "angle bogus";
  CHECK(!checker.check(bad).empty());
}

TEST_CASE("cli: off and text output") {
  auto r = run({"klein", "--generators", "1,0,0;0,1,0;1,2,5", "--off"});
  REQUIRE(r.code == 0);
  check_golden("klein_3d.off", r.out);
  r = run({"algebraic", "--matrix", "0,0,-1;1,0,3;0,1,0", "--format", "off"});
  REQUIRE(r.code == 0);
  check_golden("algebraic_3d.off", r.out);
  // header, counts, then one line per vertex and face
  std::istringstream in(r.out);
  std::string header;
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> header >> nv >> nf >> ne;
  CHECK(header == "OFF");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) lines += !line.empty();
  CHECK(lines == nv + nf);

  r = run({"cf", "quadratic", "--poly", "x^2-2", "--text"});
  REQUIRE(r.code == 0);
  check_golden("cf_quadratic.txt", r.out);
  CHECK(r.out.find("text: [1;(2)]") != std::string::npos);
}

TEST_CASE("cli: output is identical across thread counts") {
  for (const std::string name : {"stats_empirical", "stats_face_census", "algebraic_3d", "klein_3d"}) {
    CAPTURE(name);
    const Case* c = nullptr;
    for (const auto& k : json_cases())
      if (k.name == name) c = &k;
    REQUIRE(c);
    auto one = c->args, four = c->args;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    auto a = run(one), b = run(four);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
  unsetenv("SAILKIT_THREADS");
}

TEST_CASE("cli: exit codes") {
  struct Expect {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Expect> cases = {
      {{}, 2},
      {{"angle"}, 2},
      {{"angle", "lls", "--ray1", "1,0"}, 2},
      {{"angle", "lls", "--ray1", "1,x", "--ray2", "1,1"}, 2},
      {{"invariant", "area", "--a", "0,0", "--b", "1,1", "--c", "2,2"}, 2},
      {{"algebraic", "--matrix", "2,0;0,1"}, 2},
      {{"algebraic", "--matrix", "0,0,-1;1,0,3;0,1,0", "--window", "24"}, 3},
      {{"cf", "eval", "--cf", "[1;0,2]"}, 2},
      {{"stats", "empirical", "--qmax", "20000"}, 3},
      {{"stats", "gk", "--k", "1", "--off"}, 2},
      {{"jp", "--field", "x^3-3x+1", "--root", "1", "--y", "t", "--z", "t^2", "--max-steps", "2", "--require-verdict"}, 4},
      {{"klein", "--generators", "1,0;2,5", "--json", "--text"}, 2},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    auto r = run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("sailkit: ", 0) == 0);
  }
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("algebraic") != std::string::npos);
}
