#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccl/cert/checks.hpp"
#include "ccl/harness/config.hpp"

namespace ccl {

enum class RunMode { Build, Certify, Probe };

enum ExitCode : int { kExitPass = 0, kExitCertFailed = 1, kExitConfig = 2, kExitBuild = 3 };

struct ScenarioInfo {
  std::string name;
  std::string construct;  // what the scenario exercises
  std::string summary;
  bool sampled = false;   // may draw seeded samples, so a seed is mandatory
  std::vector<std::string> checks;  // accepted check names, defaults first
  std::vector<std::string> probes;  // the subset run by `probe`
};

const std::vector<ScenarioInfo>& scenario_catalog();
const ScenarioInfo* find_scenario(const std::string& name);
std::string list_scenarios();
// throws UnknownScenario
std::string describe_scenario(const std::string& name);

struct CheckOutcome {
  std::string name;
  bool passed = true;
  bool probe = false;
  std::vector<CertReport> reports;
  std::vector<std::string> report_fixtures;  // fixture tag per report
  std::vector<std::string> report_json;      // rendered with the fixture's labels
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<std::string> notes;
  // re-evaluates the witnesses of reports[i]
  std::function<bool(std::size_t, std::string*)> replay;
  std::function<const MetricGraph*(std::size_t)> graph_of;  // fixture graph of reports[i]
  std::optional<Rational> value(const std::string& key) const;
};

struct ScenarioResult {
  std::string scenario;
  std::uint64_t seed = 0;
  int exit_code = kExitPass;
  std::string error;
  std::vector<std::pair<std::string, Rational>> facts;  // fixture sizes and knobs
  std::vector<CheckOutcome> checks;
  std::vector<std::pair<std::string, std::string>> files;  // name, content
  const CheckOutcome* find(const std::string& name) const;
  const std::string* file(const std::string& name) const;
};

// Builds the fixture, runs the requested checks and renders the report files
// in memory. Never throws: errors become exit codes.
ScenarioResult run_scenario(const ScenarioConfig& config, RunMode mode = RunMode::Certify);

// Writes every rendered file under dir (created if needed).
void write_result(const ScenarioResult& result, const std::string& dir);

}  // namespace ccl
