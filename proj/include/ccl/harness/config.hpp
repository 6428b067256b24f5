#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccl/core/rational.hpp"
#include "ccl/group/group.hpp"

namespace ccl {

// One requested check and its profile constants, in file order.
struct CheckSpec {
  std::string name;
  std::vector<std::pair<std::string, Rational>> profile;
  std::optional<Rational> get(const std::string& key) const;
};

struct GroupConfig {
  GroupSpec spec;
  std::vector<std::string> generators;   // words
  std::vector<Subgroup> peripherals;     // the declared family
  std::vector<Subgroup> cone_peripherals;  // cones of the target space, when it differs
};

struct SamplingConfig {
  std::optional<std::size_t> samples;
  std::optional<std::size_t> exhaustive_core;
  std::optional<std::uint64_t> tuple_budget;
  std::optional<int> grid_den;
  std::optional<int> gcc_grid_den;
};

struct ScenarioConfig {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<int> radius;
  std::optional<int> tree_radius;
  std::optional<int> core_radius;
  std::vector<int> radii;  // probe radii
  std::string combing = "canonical";  // or "transported"
  std::optional<GroupConfig> group;
  std::optional<Rational> cone_length;
  std::optional<Rational> cone_radius;
  std::vector<Rational> spike_lengths;
  std::vector<int> sizes;  // vertex counts of the fixture pieces
  std::optional<int> count;
  std::vector<CheckSpec> checks;
  SamplingConfig sampling;
  std::optional<unsigned> jobs;
  std::string out_dir;
};

// Parses one scenario from YAML text. Throws ConfigError.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

}  // namespace ccl
