#include "ccl/harness/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "ccl/core/error.hpp"

namespace ccl {

std::optional<Rational> CheckSpec::get(const std::string& key) const {
  for (const auto& [k, v] : profile)
    if (k == key) return v;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

std::string where(const YAML::Node& n) {
  auto m = n.Mark();
  if (m.is_null()) return "";
  return " (line " + std::to_string(m.line + 1) + ")";
}

std::string scalar(const YAML::Node& n, const std::string& key) {
  if (!n.IsScalar()) fail(key + ": expected a scalar" + where(n));
  return n.Scalar();
}

template <class T>
T integer(const YAML::Node& n, const std::string& key) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    fail(key + ": expected an integer" + where(n));
  }
}

Rational rational(const YAML::Node& n, const std::string& key) {
  std::string s = scalar(n, key);
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    fail(key + ": expected a rational like 3 or 1/2, got '" + s + "'" + where(n));
  }
}

std::vector<std::string> strings(const YAML::Node& n, const std::string& key) {
  if (!n.IsSequence()) fail(key + ": expected a list" + where(n));
  std::vector<std::string> out;
  for (const auto& x : n) out.push_back(scalar(x, key));
  return out;
}

void only_keys(const YAML::Node& n, const std::set<std::string>& allowed, const std::string& ctx) {
  for (const auto& kv : n) {
    std::string k = kv.first.as<std::string>();
    if (!allowed.count(k)) fail(ctx + ": unknown key '" + k + "'" + where(kv.first));
  }
}

GroupSpec group_spec(const YAML::Node& n, const std::string& ctx) {
  if (!n.IsMap()) fail(ctx + ": expected a table" + where(n));
  only_keys(n, {"free", "abelian", "cyclic", "product", "free_product", "names",
                "generators", "peripherals", "cone_peripherals"},
            ctx);
  std::vector<std::string> names;
  if (n["names"]) names = strings(n["names"], ctx + ".names");
  int kinds = 0;
  for (const char* k : {"free", "abelian", "cyclic", "product", "free_product"}) kinds += n[k] ? 1 : 0;
  if (kinds != 1) fail(ctx + ": give exactly one of free, abelian, cyclic, product, free_product" + where(n));
  if (n["free"]) return GroupSpec::free(integer<int>(n["free"], ctx + ".free"), names);
  if (n["abelian"]) return GroupSpec::free_abelian(integer<int>(n["abelian"], ctx + ".abelian"), names);
  if (n["cyclic"]) {
    return GroupSpec::cyclic(integer<int>(n["cyclic"], ctx + ".cyclic"), names.empty() ? "c" : names.front());
  }
  const char* key = n["product"] ? "product" : "free_product";
  const YAML::Node list = n[key];
  if (!list.IsSequence() || list.size() == 0) fail(ctx + "." + key + ": expected a non-empty list" + where(list));
  std::vector<GroupSpec> factors;
  for (std::size_t i = 0; i < list.size(); ++i)
    factors.push_back(group_spec(list[i], ctx + "." + key + "[" + std::to_string(i) + "]"));
  return n["product"] ? GroupSpec::direct_product(std::move(factors)) : GroupSpec::free_product(std::move(factors));
}

std::vector<Subgroup> subgroups(const YAML::Node& n, const std::string& ctx) {
  if (!n.IsMap()) fail(ctx + ": expected a table of name: [generators]" + where(n));
  std::vector<Subgroup> out;
  for (const auto& kv : n) {
    std::string name = kv.first.as<std::string>();
    out.push_back({name, strings(kv.second, ctx + "." + name)});
  }
  return out;
}

CheckSpec check_spec(const YAML::Node& n) {
  CheckSpec c;
  if (n.IsScalar()) {
    c.name = n.Scalar();
    return c;
  }
  if (!n.IsMap() || n.size() != 1) fail("checks: each entry is a name or a single 'name: {profile}' table" + where(n));
  auto kv = *n.begin();
  c.name = kv.first.as<std::string>();
  if (kv.second.IsNull()) return c;
  if (!kv.second.IsMap()) fail("checks." + c.name + ": expected a profile table" + where(kv.second));
  for (const auto& p : kv.second) {
    std::string key = p.first.as<std::string>();
    c.profile.emplace_back(key, rational(p.second, "checks." + c.name + "." + key));
  }
  return c;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    fail(std::string("not valid YAML: ") + e.what());
  }
  if (!root.IsMap()) fail("the config must be a table");
  only_keys(root,
            {"scenario", "seed", "radius", "tree_radius", "core_radius", "radii", "combing", "group", "cone",
             "spike_lengths", "sizes", "count", "checks", "sampling", "jobs", "out"},
            "config");
  ScenarioConfig c;
  if (!root["scenario"]) fail("config: missing 'scenario'");
  c.scenario = scalar(root["scenario"], "scenario");
  if (root["seed"]) c.seed = integer<std::uint64_t>(root["seed"], "seed");
  if (root["radius"]) c.radius = integer<int>(root["radius"], "radius");
  if (root["tree_radius"]) c.tree_radius = integer<int>(root["tree_radius"], "tree_radius");
  if (root["core_radius"]) c.core_radius = integer<int>(root["core_radius"], "core_radius");
  if (root["radii"]) {
    for (const auto& x : root["radii"]) c.radii.push_back(integer<int>(x, "radii"));
  }
  if (root["combing"]) {
    c.combing = scalar(root["combing"], "combing");
    if (c.combing != "canonical" && c.combing != "transported")
      fail("combing: expected canonical or transported, got '" + c.combing + "'");
  }
  if (root["group"]) {
    const YAML::Node g = root["group"];
    GroupConfig gc;
    gc.spec = group_spec(g, "group");
    if (g["generators"]) gc.generators = strings(g["generators"], "group.generators");
    if (g["peripherals"]) gc.peripherals = subgroups(g["peripherals"], "group.peripherals");
    if (g["cone_peripherals"]) gc.cone_peripherals = subgroups(g["cone_peripherals"], "group.cone_peripherals");
    c.group = std::move(gc);
  }
  if (root["cone"]) {
    const YAML::Node cone = root["cone"];
    only_keys(cone, {"length", "radius"}, "cone");
    if (cone["length"]) c.cone_length = rational(cone["length"], "cone.length");
    if (cone["radius"]) c.cone_radius = rational(cone["radius"], "cone.radius");
  }
  if (root["spike_lengths"]) {
    if (!root["spike_lengths"].IsSequence()) fail("spike_lengths: expected a list");
    for (const auto& x : root["spike_lengths"]) c.spike_lengths.push_back(rational(x, "spike_lengths"));
  }
  if (root["sizes"]) {
    for (const auto& x : root["sizes"]) c.sizes.push_back(integer<int>(x, "sizes"));
  }
  if (root["count"]) c.count = integer<int>(root["count"], "count");
  if (root["checks"]) {
    if (!root["checks"].IsSequence()) fail("checks: expected a list");
    for (const auto& x : root["checks"]) c.checks.push_back(check_spec(x));
  }
  if (root["sampling"]) {
    const YAML::Node s = root["sampling"];
    only_keys(s, {"samples", "exhaustive_core", "tuple_budget", "grid_den", "gcc_grid_den"}, "sampling");
    if (s["samples"]) c.sampling.samples = integer<std::size_t>(s["samples"], "sampling.samples");
    if (s["exhaustive_core"])
      c.sampling.exhaustive_core = integer<std::size_t>(s["exhaustive_core"], "sampling.exhaustive_core");
    if (s["tuple_budget"]) c.sampling.tuple_budget = integer<std::uint64_t>(s["tuple_budget"], "sampling.tuple_budget");
    if (s["grid_den"]) c.sampling.grid_den = integer<int>(s["grid_den"], "sampling.grid_den");
    if (s["gcc_grid_den"]) c.sampling.gcc_grid_den = integer<int>(s["gcc_grid_den"], "sampling.gcc_grid_den");
  }
  if (root["jobs"]) c.jobs = integer<unsigned>(root["jobs"], "jobs");
  if (root["out"]) c.out_dir = scalar(root["out"], "out");
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace ccl
