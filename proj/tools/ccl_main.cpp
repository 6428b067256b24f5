#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "ccl/core/error.hpp"
#include "ccl/harness/config.hpp"
#include "ccl/harness/scenario.hpp"

namespace {

struct RunOptions {
  std::string config;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> radius;
  std::optional<unsigned> jobs;
};

void add_run_options(CLI::App* sub, RunOptions& o) {
  sub->add_option("--config", o.config, "scenario YAML file")->required()->check(CLI::ExistingFile);
  sub->add_option("--out-dir", o.out_dir, "directory for report files (default: the config's out, else ./out)");
  sub->add_option("--seed", o.seed, "overrides the config seed");
  sub->add_option("--radius", o.radius, "overrides the config radius");
  sub->add_option("--jobs", o.jobs, "worker threads (default: CCL_JOBS, else 1)");
}

int run(const RunOptions& o, ccl::RunMode mode) {
  ccl::ScenarioConfig cfg;
  try {
    cfg = ccl::load_config(o.config);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ccl::kExitConfig;
  }
  if (o.seed) cfg.seed = o.seed;
  if (o.radius) cfg.radius = o.radius;
  if (o.jobs) cfg.jobs = o.jobs;
  std::string dir = !o.out_dir.empty() ? o.out_dir : (!cfg.out_dir.empty() ? cfg.out_dir : "out");

  ccl::ScenarioResult res = ccl::run_scenario(cfg, mode);
  if (!res.error.empty()) std::cerr << res.error << "\n";
  for (const auto& c : res.checks) {
    std::cout << (c.passed ? "pass " : "FAIL ") << c.name;
    for (const auto& [k, v] : c.values) std::cout << "  " << k << "=" << v;
    std::cout << "\n";
    if (!c.passed)
      for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  }
  if (!res.files.empty()) {
    try {
      ccl::write_result(res, dir);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return ccl::kExitConfig;
    }
    std::cout << "wrote " << res.files.size() << " files to " << dir << "\n";
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccl: coarse convexity certification harness"};
  app.require_subcommand(1);
  RunOptions build_opts, certify_opts, probe_opts;
  auto* build = app.add_subcommand("build", "construct the fixture and write it out");
  add_run_options(build, build_opts);
  auto* certify = app.add_subcommand("certify", "run the scenario's checks");
  add_run_options(certify, certify_opts);
  auto* probe = app.add_subcommand("probe", "run only the scenario's empirical probes");
  add_run_options(probe, probe_opts);
  app.add_subcommand("list", "list the scenarios");
  std::string name;
  auto* describe = app.add_subcommand("describe", "describe one scenario");
  describe->add_option("scenario", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ccl::kExitConfig;
  }

  if (*build) return run(build_opts, ccl::RunMode::Build);
  if (*certify) return run(certify_opts, ccl::RunMode::Certify);
  if (*probe) return run(probe_opts, ccl::RunMode::Probe);
  if (app.got_subcommand("list")) {
    std::cout << ccl::list_scenarios();
    return 0;
  }
  try {
    std::cout << ccl::describe_scenario(name);
  } catch (const ccl::Error& e) {
    std::cerr << e.what() << "\n";
    return ccl::kExitConfig;
  }
  return 0;
}
