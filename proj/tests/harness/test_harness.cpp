#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccl/core/error.hpp"
#include "ccl/harness/config.hpp"
#include "ccl/harness/fixtures.hpp"
#include "ccl/harness/scenario.hpp"
#include "oracles.hpp"

using namespace ccl;

namespace {

ScenarioConfig shipped(const std::string& name) {
  return load_config(std::string(CCL_CONFIG_DIR) + "/" + name + ".yaml");
}

}  // namespace

TEST_CASE("config parsing: checks, rationals and groups") {
  auto c = parse_config(R"(
scenario: f2xz-coned
seed: 5
radius: 4
core_radius: 2
group:
  product:
    - free: 2
      names: [a, b]
    - abelian: 1
  peripherals:
    A: [a]
cone: {length: 1/2, radius: 3/4}
checks:
  - geodesic
  - gcc: {E: 3/2, C: 2}
sampling: {samples: 10, exhaustive_core: 5}
)");
  CHECK(c.scenario == "f2xz-coned");
  CHECK(c.seed == 5u);
  CHECK(c.cone_radius == Rational(3, 4));
  REQUIRE(c.checks.size() == 2);
  CHECK(c.checks[1].get("E") == Rational(3, 2));
  CHECK(c.checks[1].get("C") == Rational(2));
  CHECK_FALSE(c.checks[0].get("E").has_value());
  REQUIRE(c.group.has_value());
  CHECK(c.group->peripherals.size() == 1);
  CHECK(c.sampling.samples == 10u);
}

TEST_CASE("config errors") {
  auto code = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::FormatError;
  };
  CHECK(code("scenario: x\nwhat: 1\n") == ErrorCode::ConfigError);
  CHECK(code("seed: 1\n") == ErrorCode::ConfigError);
  CHECK(code("scenario: [unclosed\n") == ErrorCode::ConfigError);
  CHECK(code("scenario: x\ncombing: sideways\n") == ErrorCode::ConfigError);
  CHECK(code("scenario: x\ngroup: {free: 2, abelian: 1}\n") == ErrorCode::ConfigError);
}

TEST_CASE("every shipped config parses and names a catalog scenario") {
  int n = 0;
  for (const auto& e : std::filesystem::directory_iterator(CCL_CONFIG_DIR)) {
    if (e.path().extension() != ".yaml") continue;
    auto c = load_config(e.path().string());
    const ScenarioInfo* info = find_scenario(c.scenario);
    REQUIRE_MESSAGE(info, e.path());
    CHECK(e.path().stem() == c.scenario);
    if (info->sampled) CHECK_MESSAGE(c.seed.has_value(), e.path());
    ++n;
  }
  CHECK(n == static_cast<int>(scenario_catalog().size()));
}

TEST_CASE("list and describe") {
  CHECK(scenario_catalog().size() >= 6);
  std::string list = list_scenarios();
  for (const auto& s : scenario_catalog()) CHECK(list.find(s.name) != std::string::npos);
  std::string d = describe_scenario("f2xz-coned");
  CHECK(d.find("coned-off") != std::string::npos);
  CHECK(d.find("Gamma-hat") != std::string::npos);
  CHECK(d.find("seed: required") != std::string::npos);
  CHECK_THROWS_AS(describe_scenario("nope"), Error);
}

TEST_CASE("exit codes per error class") {
  ScenarioConfig unknown;
  unknown.scenario = "nope";
  CHECK(run_scenario(unknown).exit_code == kExitConfig);

  // sampled scenario without a seed
  auto noseed = parse_config("scenario: tree-sanity\ncount: 1\nsizes: [4]\n");
  auto r = run_scenario(noseed);
  CHECK(r.exit_code == kExitConfig);
  CHECK(r.files.empty());

  auto badcheck = parse_config("scenario: cycle6-sufficiency\nchecks: [qi-probe]\n");
  CHECK(run_scenario(badcheck).exit_code == kExitConfig);

  auto badparam = parse_config("scenario: cycle6-sufficiency\nchecks:\n  - gcc: {E: 1/2}\n");
  CHECK(run_scenario(badparam).exit_code == kExitConfig);

  auto badbuild = parse_config("scenario: cycle6-sufficiency\nsizes: [2]\n");
  CHECK(run_scenario(badbuild, RunMode::Build).exit_code == kExitBuild);

  auto ok = parse_config("scenario: cycle6-sufficiency\n");
  auto b = run_scenario(ok, RunMode::Build);
  CHECK(b.exit_code == kExitPass);
  CHECK(b.checks.empty());
  CHECK(b.file("cycle.graph") != nullptr);
}

TEST_CASE("a failing check writes replayable witnesses") {
  auto cfg = parse_config("scenario: cycle6-sufficiency\nchecks:\n  - gcc: {E: 1, C: 0}\n");
  auto r = run_scenario(cfg);
  CHECK(r.exit_code == kExitCertFailed);
  REQUIRE(r.file("witnesses.json"));
  CHECK(r.file("witnesses.json")->find("\"replayed\": true") != std::string::npos);
  const CheckOutcome* g = r.find("gcc");
  REQUIRE(g);
  REQUIRE(g->reports.size() == 1);
  REQUIRE(g->reports[0].witness);
  std::string why;
  CHECK_MESSAGE(g->replay(0, &why), why);

  auto dir = std::filesystem::temp_directory_path() / "ccl_harness_test";
  std::filesystem::remove_all(dir);
  write_result(r, dir.string());
  CHECK(std::filesystem::exists(dir / "witnesses.json"));
  CHECK(std::filesystem::exists(dir / "report.json"));
  CHECK(std::filesystem::exists(dir / "sweep.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("reruns are byte-identical") {
  auto cfg = shipped("cycle6-sufficiency");
  auto a = run_scenario(cfg);
  auto b = run_scenario(cfg);
  CHECK(a.exit_code == kExitPass);
  CHECK(a.files == b.files);

  // exhaustive_core 0 forces the seeded sampling path
  auto t = parse_config(
      "scenario: tree-sanity\nseed: 3\ncount: 2\nsizes: [30]\nsampling: {samples: 500, exhaustive_core: 0}\n");
  t.jobs = 1;
  auto x = run_scenario(t);
  t.jobs = 3;
  auto y = run_scenario(t);
  CHECK(x.exit_code == kExitPass);
  CHECK(x.files == y.files);
  t.seed = 4;
  CHECK(run_scenario(t).files != x.files);
}

TEST_CASE("report contents have no timestamps and sorted keys") {
  auto r = run_scenario(parse_config("scenario: cycle6-sufficiency\nchecks: [gcc]\n"));
  const std::string* rep = r.file("report.json");
  REQUIRE(rep);
  CHECK(rep->find("time") == std::string::npos);
  CHECK(rep->find("\"checks\"") < rep->find("\"scenario\""));
  const std::string* csv = r.file("sweep.csv");
  REQUIRE(csv);
  CHECK(csv->rfind("fixture,property,E,C_min\n", 0) == 0);
  CHECK(csv->find("cycle6,gcc,1,20/9") != std::string::npos);
}

TEST_CASE("probe mode runs only the probes") {
  auto cfg = parse_config("scenario: spherical-cone\nseed: 1\ncount: 20\n");
  auto r = run_scenario(cfg, RunMode::Probe);
  CHECK(r.exit_code == kExitPass);
  CHECK(r.checks.size() == 2);
  for (const auto& c : r.checks) CHECK(c.probe);

  auto z = parse_config("scenario: amalgam-f2\nradius: 3\ntree_radius: 7\nradii: [3]\n");
  auto p = run_scenario(z, RunMode::Probe);
  REQUIRE(p.checks.size() == 1);
  CHECK(p.checks[0].name == "qi-probe");
}

TEST_CASE("fixtures") {
  auto c = cycle_graph(5);
  CHECK(c->graph().vertex_count() == 5);
  CHECK(c->distance(0, 3) == Rational(2));
  auto t1 = random_tree(40, 9), t2 = random_tree(40, 9);
  CHECK(t1->graph().edge_count() == 39);
  for (EdgeId e = 0; e < 39; ++e) CHECK(t1->graph().edge(e).length == t2->graph().edge(e).length);

  auto comb = build_combination({8, 6}, Rational(1), 4, FamilyMode::Independent);
  REQUIRE(comb.glue != kNoVertex);
  CHECK(comb.tos->k_count() == 2);
  // ball of radius 4 around the gluing point: the point, two spiked vertices
  // at 1 and their cycle neighbours up to distance 3 on each side
  auto d = oracle::sssp(comb.tos->graph(), comb.glue);
  std::size_t inside = 0;
  for (const auto& x : d) inside += (x && !(*x > Rational(4))) ? 1 : 0;
  CHECK(comb.core.size() == inside);
  CHECK(inside == 1 + 7 + 6);

  CHECK_THROWS_AS(build_combination({8}, Rational(1), 4, FamilyMode::Independent), Error);
}
