#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hekdv/cli.hpp"
#include "hekdv/errors.hpp"
#include "hekdv/ratlimit.hpp"

using namespace hekdv;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hekdv_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("verify all writes one entry per check") {
  const fs::path path = scratch("all.json");
  const Outcome o = run({"verify", "all", "--out", path.string()});
  CHECK(o.code == 0);
  const auto doc = read_json(path);
  CHECK(doc["overall"] == "PASS");
  CHECK(doc["version"] == cli::kVersion);
  std::vector<std::string> ids;
  for (const auto& c : doc["checks"]) {
    CHECK(c["status"] == "PASS");
    CHECK(c.contains("paper_anchor"));
    CHECK(c.contains("residual_summary"));
    CHECK(c["millis"].is_number());
    ids.push_back(c["id"]);
  }
  for (const char* id : {"thm-3.1-I", "thm-3.1-II", "prop-5.4-T1", "prop-5.4-T3", "eq-seconddif", "thm-5.5-first",
                         "thm-5.5-fourth", "prop-6.5", "prop-6.3", "thm-8.1", "thm-A.1", "ex-A.1", "ex-A.3"})
    CHECK_MESSAGE(std::find(ids.begin(), ids.end(), id) != ids.end(), id);
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("suite composition") {
  auto ids = [](const std::string& suite) {
    std::vector<std::string> out;
    for (const auto& r : cli::run_suite(suite)) out.push_back(r.id);
    return out;
  };
  CHECK(ids("dkdv") == std::vector<std::string>{"eq-seconddif", "thm-5.5-first", "thm-5.5-second", "thm-5.5-third",
                                                "thm-5.5-fourth", "prop-6.5", "prop-6.3"});
  CHECK(ids("rational") == std::vector<std::string>{"sec8-uv", "thm-8.1", "sec8-genus2"});
  CHECK(ids("appendix") == std::vector<std::string>{"app-A-F", "thm-A.1", "ex-A.1", "ex-A.3"});
  CHECK(ids("psi") == std::vector<std::string>{"prop-6.3"});
  CHECK_THROWS_AS(cli::run_suite("nope"), ConfigError);
}

TEST_CASE("report output is deterministic apart from timings") {
  auto stripped = [](const fs::path& p) {
    auto doc = read_json(p);
    for (auto& c : doc["checks"]) c.erase("millis");
    return doc.dump(2);
  };
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  REQUIRE(run({"verify", "all", "--out", a.string()}).code == 0);
  REQUIRE(run({"verify", "all", "--out", b.string()}).code == 0);
  CHECK(stripped(a) == stripped(b));

  const fs::path c1 = scratch("c1.csv"), c2 = scratch("c2.csv");
  REQUIRE(run({"simulate", "--flow", "T3", "--p1", "2,+", "--p2", "3,-", "--t-end", "0.05", "--csv", c1.string()})
              .code == 0);
  REQUIRE(run({"simulate", "--flow", "T3", "--p1", "2,+", "--p2", "3,-", "--t-end", "0.05", "--csv", c2.string()})
              .code == 0);
  CHECK(slurp(c1) == slurp(c2));
}

TEST_CASE("emit_report") {
  const auto pass = cli::emit_report({verify_rational_kdv(), verify_example1()});
  CHECK(pass["overall"] == "PASS");
  CHECK(pass["checks"].size() == 2);

  RationalKdVCoefficients k;
  k.a2 = -5;
  const auto fail = cli::emit_report({verify_rational_kdv(k), verify_example1()});
  CHECK(fail["overall"] == "FAIL");
  CHECK(fail["checks"][0]["status"] == "FAIL");
  CHECK(fail["checks"][1]["status"] == "PASS");
  const std::string summary = fail["checks"][0]["residual_summary"];
  CHECK(summary.find("1 of 3 residuals nonzero") != std::string::npos);

  CHECK_THROWS_AS(cli::emit_report({}), MalformedInput);
}

TEST_CASE("exit code matrix") {
  const fs::path csv = scratch("traj.csv");
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"verify", "rational"}, 0},
      {{"verify", "appendix"}, 0},
      {{"series", "phi", "--order", "12"}, 0},
      {{"simulate", "--flow", "I", "--y", "0,0,0,0,0,1", "--p1", "2,+", "--p2", "3,+", "--t-end", "1", "--csv",
        csv.string()},
       0},
      {{"commute", "--sigma", "0.1", "--tau", "0.1"}, 0},
      {{"commute", "--sigma", "0.1", "--tau", "0.1", "--pair", "I_II"}, 0},
      // real seed: flow II leaves every bounded region before t = 0.1
      {{"simulate", "--flow", "II", "--p1", "2,+", "--p2", "3,+", "--t-end", "1"}, 1},
      {{"commute", "--sigma", "0.1", "--tau", "0.1", "--pair", "I_II", "--p1", "2,+", "--p2", "3,+"}, 1},
      {{}, 2},
      {{"verify"}, 2},
      {{"verify", "everything"}, 2},
      {{"verify", "all", "--bogus"}, 2},
      {{"simulate"}, 2},
      {{"simulate", "--flow", "IV"}, 2},
      {{"simulate", "--flow", "I", "--y", "0,0,0,0,1"}, 2},
      {{"simulate", "--flow", "I", "--y", "0,0,0,0,0,0.5"}, 2},
      {{"simulate", "--flow", "I", "--y", "0,0,0,0,0,0"}, 2},
      {{"simulate", "--flow", "I", "--p1", "1,1"}, 2},
      {{"simulate", "--flow", "I", "--p1", "2,+", "--p2", "2,+"}, 2},
      {{"simulate", "--flow", "T1", "--p1", "0,+"}, 2},
      {{"simulate", "--flow", "I", "--rel-tol", "0"}, 2},
      {{"series", "psi"}, 2},
      {{"series", "phi", "--order", "1"}, 2},
      {{"commute", "--sigma", "0.1"}, 2},
      {{"commute", "--sigma", "0.1", "--tau", "0.1", "--pair", "T1II"}, 2},
      {{"verify", "psi", "--out", "/nonexistent-dir/r.json"}, 2},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    const Outcome o = run(c.args);
    CHECK_MESSAGE(o.code == c.code, joined, " stderr: ", o.err);
    if (c.code == 2) CHECK_MESSAGE(!o.err.empty(), joined);
  }
  CHECK(slurp(csv).rfind("time,u2,u4,u5,u7,H12,H14\n", 0) == 0);
}

TEST_CASE("config files") {
  const fs::path good = scratch("good.toml"), bad = scratch("bad.toml"), out = scratch("cfg.json");
  {
    std::ofstream f(good);
    f << "[verify]\nout = \"" << out.string() << "\"\n";
    std::ofstream g(bad);
    g << "[verify]\nwhatever = 3\n";
  }
  fs::remove(out);
  CHECK(run({"--config", good.string(), "verify", "psi"}).code == 0);
  CHECK(fs::exists(out));
  CHECK(run({"--config", bad.string(), "verify", "psi"}).code == 2);
  CHECK(run({"--config", scratch("missing.toml").string(), "verify", "psi"}).code == 2);
}

TEST_CASE("memory cap variable is validated") {
  ::setenv("HEKDV_MEM_CAP_MB", "zero", 1);
  CHECK(run({"verify", "psi"}).code == 2);
  ::setenv("HEKDV_MEM_CAP_MB", "0", 1);
  CHECK(run({"verify", "psi"}).code == 2);
  ::setenv("HEKDV_MEM_CAP_MB", "4096", 1);
  CHECK(run({"verify", "psi"}).code == 0);
  ::unsetenv("HEKDV_MEM_CAP_MB");
}
