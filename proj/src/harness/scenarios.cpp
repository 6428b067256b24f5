#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>

#include <json.hpp>

#include "ccl/cert/report.hpp"
#include "ccl/cert/sufficiency.hpp"
#include "ccl/coned/cone_io.hpp"
#include "ccl/coned/spherical.hpp"
#include "ccl/core/error.hpp"
#include "ccl/core/parallel.hpp"
#include "ccl/core/rng.hpp"
#include "ccl/graph/graph_io.hpp"
#include "ccl/group/probes.hpp"
#include "ccl/harness/fixtures.hpp"
#include "ccl/harness/scenario.hpp"

namespace ccl {

std::optional<Rational> CheckOutcome::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  return std::nullopt;
}

const CheckOutcome* ScenarioResult::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::string* ScenarioResult::file(const std::string& name) const {
  for (const auto& [n, body] : files)
    if (n == name) return &body;
  return nullptr;
}

namespace {

using Handler = std::function<CheckOutcome(const CheckSpec&)>;
using Handlers = std::map<std::string, Handler>;

struct Context {
  const ScenarioConfig& cfg;
  std::uint64_t seed = 0;
  int core_radius = -1;
  ScenarioResult& out;

  SamplePlan plan(const std::string& stream) const {
    SamplePlan p;
    const auto& s = cfg.sampling;
    if (s.samples) p.samples = *s.samples;
    if (s.exhaustive_core) p.exhaustive_core = *s.exhaustive_core;
    if (s.tuple_budget) p.tuple_budget = *s.tuple_budget;
    if (s.grid_den) p.grid_den = *s.grid_den;
    if (s.gcc_grid_den) p.gcc_grid_den = *s.gcc_grid_den;
    p.jobs = cfg.jobs.value_or(0);
    p.seed = derive_seed(seed, cfg.scenario + "/" + stream);
    p.core_radius = core_radius;
    return p;
  }
  SamplePlan plan(const std::string& stream, const Rational& extra) const {
    SamplePlan p = plan(stream);
    p.sweep = with_value(p.sweep, extra);
    return p;
  }
};

using Candidates = std::shared_ptr<const std::vector<std::vector<VertexId>>>;

// Collects reports for one check; the replay closure keeps the combings alive.
struct OutcomeBuilder {
  CheckOutcome out;
  std::vector<std::pair<std::shared_ptr<const Combing>, Candidates>> sources;

  explicit OutcomeBuilder(std::string name) { out.name = std::move(name); }

  void add(CertReport r, const std::string& fixture, std::shared_ptr<const Combing> g, Candidates cand = nullptr) {
    out.report_json.push_back(report_to_json(r, g->graph(), -1));
    out.report_fixtures.push_back(fixture);
    out.passed = out.passed && r.certified;
    out.reports.push_back(std::move(r));
    sources.emplace_back(std::move(g), std::move(cand));
  }

  CheckOutcome finish() {
    if (!sources.empty()) {
      auto src = std::make_shared<decltype(sources)>(std::move(sources));
      auto reports = std::make_shared<std::vector<CertReport>>(out.reports);
      out.replay = [src, reports](std::size_t i, std::string* why) {
        const auto& [g, cand] = src->at(i);
        return replay_witnesses(*g, reports->at(i), cand.get(), why);
      };
      out.graph_of = [src](std::size_t i) { return &src->at(i).first->graph(); };
    }
    return std::move(out);
  }
};

Rational prof(const CheckSpec& c, const std::string& key, const Rational& fallback) {
  return c.get(key).value_or(fallback);
}

Rational minimal_at(const CertReport& r, const Rational& m) {
  for (const auto& [e, c] : r.sweep)
    if (e == m) return c;
  throw Error(ErrorCode::ParameterOutOfRange, r.property + " has no sweep row at " + m.str());
}

// least K the consistency display needed
Rational consistency_min(const CertReport& r) {
  return r.certified ? Rational(0) : r.witness->required;
}

// ---- tree-sanity -----------------------------------------------------------

Handlers tree_sanity(Context& c) {
  int count = c.cfg.count.value_or(20);
  int max_n = c.cfg.sizes.empty() ? 200 : c.cfg.sizes.front();
  if (count < 1 || max_n < 2) throw Error(ErrorCode::ConfigError, "tree-sanity needs count >= 1 and sizes[0] >= 2");
  struct Tree {
    std::string tag;
    std::shared_ptr<const Combing> combing;
    std::vector<VertexId> core;
  };
  auto trees = std::make_shared<std::vector<Tree>>();
  for (int i = 0; i < count; ++i) {
    Rng size_rng(derive_seed(c.seed, "tree-size", static_cast<std::uint64_t>(i)));
    int n = max_n / 2 + static_cast<int>(size_rng.below(static_cast<std::uint64_t>(max_n - max_n / 2 + 1)));
    auto m = random_tree(n, derive_seed(c.seed, "tree", static_cast<std::uint64_t>(i)));
    char tag[32];
    std::snprintf(tag, sizeof tag, "tree-%02d", i);
    c.out.files.emplace_back(std::string(tag) + ".graph", graph_to_string(m->graph()));
    trees->push_back({tag, std::make_shared<const CanonicalCombing>(m), all_vertices(m->graph())});
  }
  c.core_radius = -1;
  c.out.facts = {{"trees", Rational(count)}, {"max_vertices", Rational(max_n)}};

  auto each = [trees, &c](const std::string& name, const std::function<CertReport(const Tree&, const SamplePlan&)>& f) {
    OutcomeBuilder b(name);
    for (const auto& t : *trees) b.add(f(t, c.plan(name + "/" + t.tag)), t.tag, t.combing);
    return b.finish();
  };
  Handlers h;
  h["geodesic"] = [each](const CheckSpec&) {
    return each("geodesic", [](const Tree& t, const SamplePlan& p) { return check_geodesic(*t.combing, t.core, p); });
  };
  h["gcc"] = [each](const CheckSpec& s) {
    Rational E = prof(s, "E", Rational(1)), C = prof(s, "C", Rational(0));
    return each("gcc", [=](const Tree& t, const SamplePlan& p) { return check_gcc(*t.combing, t.core, E, C, p); });
  };
  h["consistency"] = [each](const CheckSpec& s) {
    Rational K = prof(s, "K", Rational(0));
    return each("consistency",
                [=](const Tree& t, const SamplePlan& p) { return check_consistency(*t.combing, t.core, K, p); });
  };
  h["bounded"] = [each](const CheckSpec& s) {
    Rational l = prof(s, "lambda", Rational(1)), k = prof(s, "k", Rational(0));
    Rational c1 = prof(s, "c1", Rational(1)), c2 = prof(s, "c2", Rational(0));
    return each("bounded", [=](const Tree& t, const SamplePlan& p) {
      return check_bounded(*t.combing, t.core, l, k, c1, c2, p);
    });
  };
  return h;
}

// gcc at (E, C), or at the measured minimal C when the profile omits C
CheckOutcome gcc_outcome(const Context& c, const CheckSpec& s, const std::shared_ptr<const Combing>& g,
                         const std::vector<VertexId>& core, const std::string& tag, const Rational& default_E,
                         std::optional<Rational> default_C) {
  Rational E = prof(s, "E", default_E);
  std::optional<Rational> C = s.get("C");
  if (!C) C = default_C;
  OutcomeBuilder b("gcc");
  SamplePlan plan = c.plan("gcc", E);
  if (!C) {
    CertReport probe = check_gcc(*g, core, E, Rational(0), plan);
    C = minimal_at(probe, E);
    b.out.notes.push_back("no C given: certified at the measured minimum " + C->str());
  }
  CertReport r = check_gcc(*g, core, E, *C, plan);
  b.out.values.emplace_back("E", E);
  b.out.values.emplace_back("C", *C);
  b.out.values.emplace_back("C_min", minimal_at(r, E));
  for (const auto& [e, cm] : r.sweep) b.out.values.emplace_back("C_min@E=" + e.str(), cm);
  b.add(std::move(r), tag, g);
  return b.finish();
}

void sufficiency_values(OutcomeBuilder& b) {
  for (const auto& [k, v] : b.out.reports.back().profile) b.out.values.emplace_back(k, v);
}

CheckOutcome thin_outcome(const Context& c, const CheckSpec& s, const std::shared_ptr<const Combing>& g,
                          std::shared_ptr<const std::vector<std::vector<VertexId>>> candidates,
                          const std::vector<VertexId>& core, const std::vector<VertexId>& subspace_core,
                          const std::string& tag, const Rational& default_D) {
  Rational E = prof(s, "E", Rational(1));
  Rational D = prof(s, "D", default_D);
  std::optional<Rational> C = s.get("C");
  OutcomeBuilder b("sufficiency-thin");
  SamplePlan plan = c.plan("sufficiency-thin", E);
  if (!C) {
    // the subspace constant: minimal gcc constant of the combing restricted to
    // the candidate's core
    CertReport x = check_gcc(*g, subspace_core, E, Rational(0), plan);
    C = minimal_at(x, E);
    b.out.notes.push_back("C is the measured gcc constant of the subspace: " + C->str());
  }
  try {
    b.add(cross_check_thin(*g, *candidates, core, *C, D, E, plan), tag, g, candidates);
    sufficiency_values(b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PremiseNotCertified) throw;
    b.out.notes.push_back(std::string("thinness premise not certified, no conclusion required: ") + e.what());
    b.out.values.emplace_back("premise_certified", Rational(0));
  }
  return b.finish();
}

// ---- cycle6-sufficiency ----------------------------------------------------

Handlers cycle_sufficiency(Context& c) {
  int n = c.cfg.sizes.empty() ? 6 : c.cfg.sizes.front();
  auto m = cycle_graph(n);
  std::shared_ptr<const Combing> g = std::make_shared<const CanonicalCombing>(m);
  auto core = all_vertices(m->graph());
  c.core_radius = n / 2;
  c.out.files.emplace_back("cycle.graph", graph_to_string(m->graph()));
  c.out.facts = {{"vertices", Rational(n)}};
  std::string tag = "cycle" + std::to_string(n);
  Handlers h;
  h["gcc"] = [&c, g, core, tag](const CheckSpec& s) {
    return gcc_outcome(c, s, g, core, tag, Rational(1), std::nullopt);
  };
  h["sufficiency-gccc"] = [&c, g, core, tag](const CheckSpec& s) {
    OutcomeBuilder b("sufficiency-gccc");
    b.add(cross_check_gccc(*g, core, prof(s, "E", Rational(1)), c.plan("sufficiency-gccc")), tag, g);
    sufficiency_values(b);
    return b.finish();
  };
  h["sufficiency-ccgccc"] = [&c, g, core, tag](const CheckSpec& s) {
    OutcomeBuilder b("sufficiency-ccgccc");
    b.add(cross_check_ccgccc(*g, core, prof(s, "E", Rational(1)), c.plan("sufficiency-ccgccc")), tag, g);
    sufficiency_values(b);
    return b.finish();
  };
  h["sufficiency-thin"] = [&c, g, core, tag](const CheckSpec& s) {
    auto cands = std::make_shared<const std::vector<std::vector<VertexId>>>(std::vector<std::vector<VertexId>>{core});
    return thin_outcome(c, s, g, cands, core, core, tag, Rational(1));
  };
  return h;
}

// ---- f2xz-coned ------------------------------------------------------------

struct GroupSetup {
  std::shared_ptr<const Group> group;
  std::vector<Element> generators;
  std::vector<Subgroup> peripherals;
  std::vector<Subgroup> cone_peripherals;
};

GroupSetup group_setup(const ScenarioConfig& cfg, const GroupSpec& spec, std::vector<std::string> gens,
                       std::vector<Subgroup> peripherals, std::vector<Subgroup> cone_peripherals) {
  if (cfg.group) {
    const auto& g = *cfg.group;
    GroupSetup s{make_group(g.spec), {}, g.peripherals, g.cone_peripherals};
    for (const auto& w : g.generators.empty() ? s.group->generator_names() : g.generators)
      s.generators.push_back(s.group->parse_word(w));
    if (s.cone_peripherals.empty()) s.cone_peripherals = s.peripherals;
    return s;
  }
  GroupSetup s{make_group(spec), {}, std::move(peripherals), std::move(cone_peripherals)};
  for (const auto& w : gens) s.generators.push_back(s.group->parse_word(w));
  if (s.cone_peripherals.empty()) s.cone_peripherals = s.peripherals;
  return s;
}

GroupSpec f2xz_spec() {
  return GroupSpec::direct_product({GroupSpec::free(2, {"a", "b"}), GroupSpec::free_abelian(1, {"z"})});
}

Handlers f2xz_coned(Context& c) {
  auto gs = group_setup(c.cfg, f2xz_spec(), {"a", "b", "z"}, {{"A", {"a"}}}, {});
  ConedFixtureSpec spec;
  spec.group = gs.group;
  spec.generators = gs.generators;
  spec.peripherals = gs.peripherals;
  spec.cone_length = c.cfg.cone_length.value_or(Rational(1, 2));
  spec.radius = c.cfg.radius.value_or(6);
  spec.core_radius = c.cfg.core_radius.value_or(spec.radius / 2);
  spec.D = c.cfg.cone_radius.value_or(Rational(1, 2));
  auto f = std::make_shared<const ConedFixture>(build_coned_fixture(spec));
  c.core_radius = f->core_radius;
  c.out.files.emplace_back("cone_spec.txt", cone_spec_to_string(f->spec));
  c.out.facts = {{"radius", Rational(spec.radius)},
                 {"core_radius", Rational(spec.core_radius)},
                 {"cone_length", spec.cone_length},
                 {"D", f->space->D},
                 {"x_vertices", Rational(static_cast<std::int64_t>(f->x->graph().vertex_count()))},
                 {"coned_vertices", Rational(static_cast<std::int64_t>(f->space->metric->graph().vertex_count()))},
                 {"cones", Rational(static_cast<std::int64_t>(f->spec.cones.size()))},
                 {"x_core", Rational(static_cast<std::int64_t>(f->x_core.size()))},
                 {"core", Rational(static_cast<std::int64_t>(f->core.size()))}};
  std::shared_ptr<const Combing> gh = f->gamma_hat;
  const std::string tag = "f2xz-coned";
  Handlers h;
  h["cone-validation"] = [f](const CheckSpec&) {
    CheckOutcome o;
    o.name = "cone-validation";
    o.passed = f->validation.ok;
    for (const auto& fd : f->validation.findings)
      o.notes.push_back(fd.check + ": " + (fd.passed ? "pass" : "fail [" + fd.witness + "]"));
    o.values.emplace_back("D", f->validation.D);
    return o;
  };
  h["isometric-embedding"] = [f](const CheckSpec&) {
    CheckOutcome o;
    o.name = "isometric-embedding";
    std::int64_t pairs = 0, mismatches = 0;
    const auto& xm = *f->x->metric;
    const auto& cm = *f->space->metric;
    for (VertexId u : f->x_core)
      for (VertexId v : f->x_core) {
        ++pairs;
        if (xm.distance(u, v) != cm.distance(u, v)) {
          if (mismatches++ == 0)
            o.notes.push_back("first mismatch: " + xm.graph().label(u) + ", " + xm.graph().label(v));
        }
      }
    o.passed = mismatches == 0;
    o.values = {{"pairs", Rational(pairs)}, {"mismatches", Rational(mismatches)}};
    o.notes.push_back("exhaustive over ordered pairs of the X core");
    return o;
  };
  h["cone-crossings"] = [f, gh](const CheckSpec& s) {
    CheckOutcome o;
    o.name = "cone-crossings";
    Rational limit = prof(s, "max", Rational(2));
    std::int64_t pairs = 0;
    std::size_t worst = 0;
    for (VertexId u : f->core)
      for (VertexId v : f->core) {
        ++pairs;
        std::size_t k = cone_crossings(*f->space, gh->path(u, v));
        if (k > worst) {
          worst = k;
          o.notes.resize(0);
          o.notes.push_back("most crossings: " + gh->graph().label(u) + " -> " + gh->graph().label(v));
        }
      }
    o.values = {{"pairs", Rational(pairs)}, {"max_crossings", Rational(static_cast<std::int64_t>(worst))},
                {"limit", limit}};
    o.passed = !(Rational(static_cast<std::int64_t>(worst)) > limit);
    o.notes.push_back("exhaustive over ordered pairs of the core");
    return o;
  };
  h["geodesic"] = [&c, f, gh, tag](const CheckSpec&) {
    OutcomeBuilder b("geodesic");
    b.add(check_geodesic(*gh, f->core, c.plan("geodesic")), tag, gh);
    return b.finish();
  };
  h["gcc"] = [&c, f, gh, tag](const CheckSpec& s) {
    Rational E = prof(s, "E", Rational(3));
    Rational D = f->space->D;
    Rational budget = Rational(6) * E * D + Rational(12) * D;
    auto o = gcc_outcome(c, s, gh, f->core, tag, Rational(3), budget);
    o.values.emplace_back("budget_6ED_12D", budget);
    return o;
  };
  h["sufficiency-gccc"] = [&c, f, gh, tag](const CheckSpec& s) {
    OutcomeBuilder b("sufficiency-gccc");
    b.add(cross_check_gccc(*gh, f->core, prof(s, "E", Rational(1)), c.plan("sufficiency-gccc")), tag, gh);
    sufficiency_values(b);
    return b.finish();
  };
  h["sufficiency-ccgccc"] = [&c, f, gh, tag](const CheckSpec& s) {
    OutcomeBuilder b("sufficiency-ccgccc");
    b.add(cross_check_ccgccc(*gh, f->core, prof(s, "E", Rational(1)), c.plan("sufficiency-ccgccc")), tag, gh);
    sufficiency_values(b);
    return b.finish();
  };
  h["sufficiency-thin"] = [&c, f, gh, tag](const CheckSpec& s) {
    std::vector<VertexId> x(f->space->base_count());
    for (VertexId v = 0; v < x.size(); ++v) x[v] = v;
    auto cands = std::make_shared<const std::vector<std::vector<VertexId>>>(std::vector<std::vector<VertexId>>{x});
    return thin_outcome(c, s, gh, cands, f->core, f->x_core, tag, f->space->D);
  };
  return h;
}

// ---- group trees -----------------------------------------------------------

FamilyMode family_mode(const ScenarioConfig& cfg) {
  return cfg.combing == "transported" ? FamilyMode::Transported : FamilyMode::Independent;
}

CheckOutcome structural_outcome(const GroupTree& tree, int core_radius, const std::string& tag) {
  CheckOutcome o;
  o.name = "structural";
  auto suite = structural_suite(tree.tos, group_tree_core(tree, core_radius));
  std::vector<StructuralFinding> all = suite.findings;
  all.push_back(spike_identification_check(tree));
  all.push_back(stabilizer_bookkeeping(tree));
  for (const auto& f : all) {
    o.passed = o.passed && f.passed;
    o.values.emplace_back(tag + "." + f.check + ".checked", Rational(static_cast<std::int64_t>(f.checked)));
    o.notes.push_back(tag + " " + f.check + ": " + (f.passed ? "pass" : "fail") +
                      (f.witness.empty() ? "" : " [" + f.witness + "]"));
  }
  return o;
}

CheckOutcome equivariance_outcome(const GroupTree& tree, FamilyMode mode, int core_radius, const std::string& tag) {
  CheckOutcome o;
  o.name = "equivariance";
  auto tos = std::make_shared<const TreeOfSpaces>(tree.tos);
  auto family = canonical_family(tos, mode);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < tree.group->generator_names().size(); ++i) gens.push_back(tree.group->generator(i));
  std::vector<Element> elems;
  std::vector<std::string> names;
  for (const auto& e : generator_table(*tree.group, gens)) {
    elems.push_back(e);
    names.push_back(tree.group->format(e));
  }
  auto action = group_tree_action(tree, elems);
  auto fam = family_equivariance(*family, names, action);
  CombinedCombing gamma(tos, family);
  auto comb = combing_equivariance(gamma, names, action, group_tree_core(tree, core_radius));
  o.passed = fam.ok && comb.ok;
  o.values = {{tag + ".family.checked", Rational(static_cast<std::int64_t>(fam.checked))},
              {tag + ".family.violations", Rational(static_cast<std::int64_t>(fam.violations))},
              {tag + ".combined.checked", Rational(static_cast<std::int64_t>(comb.checked))},
              {tag + ".combined.violations", Rational(static_cast<std::int64_t>(comb.violations))}};
  o.notes.push_back(std::string("family mode: ") + (mode == FamilyMode::Transported ? "transported" : "independent"));
  if (!fam.ok) o.notes.push_back("family: " + fam.witness);
  if (!comb.ok) o.notes.push_back("combined: " + comb.witness);
  return o;
}

Handlers amalgam_f2(Context& c) {
  int r = c.cfg.radius.value_or(4);
  int tr = c.cfg.tree_radius.value_or(2 * r + 1);
  int core = c.cfg.core_radius.value_or(r / 2);
  std::vector<Rational> ells = c.cfg.spike_lengths.empty() ? std::vector<Rational>{Rational(1)} : c.cfg.spike_lengths;
  std::vector<int> radii = c.cfg.radii.empty() ? std::vector<int>{3, 4, 5} : c.cfg.radii;
  auto trees = std::make_shared<std::vector<std::pair<std::string, GroupTree>>>();
  for (const auto& ell : ells) {
    std::string tag = "ell=" + ell.str();
    trees->emplace_back(tag, build_pushout(zz_amalgam(r, tr, ell)));
    c.out.files.emplace_back("pushout_" + std::to_string(trees->size() - 1) + ".tos",
                             tree_of_spaces_to_string(trees->back().second.tos));
  }
  c.core_radius = core;
  c.out.facts = {{"radius", Rational(r)}, {"tree_radius", Rational(tr)}, {"core_radius", Rational(core)},
                 {"z_vertices", Rational(static_cast<std::int64_t>(trees->front().second.tos.graph().vertex_count()))}};
  Handlers h;
  h["structural"] = [trees, core](const CheckSpec&) {
    CheckOutcome all;
    all.name = "structural";
    for (const auto& [tag, t] : *trees) {
      auto o = structural_outcome(t, core, tag);
      all.passed = all.passed && o.passed;
      all.values.insert(all.values.end(), o.values.begin(), o.values.end());
      all.notes.insert(all.notes.end(), o.notes.begin(), o.notes.end());
    }
    return all;
  };
  h["equivariance"] = [trees, core, &c](const CheckSpec&) {
    CheckOutcome all;
    all.name = "equivariance";
    for (const auto& [tag, t] : *trees) {
      auto o = equivariance_outcome(t, family_mode(c.cfg), core, tag);
      all.passed = all.passed && o.passed;
      all.values.insert(all.values.end(), o.values.begin(), o.values.end());
      all.notes.insert(all.notes.end(), o.notes.begin(), o.notes.end());
    }
    return all;
  };
  h["qi-probe"] = [radii, ells](const CheckSpec&) {
    CheckOutcome o;
    o.name = "qi-probe";
    o.probe = true;
    auto f2 = make_group(GroupSpec::free(2, {"a", "b"}));
    std::vector<Element> gens{f2->parse_word("a"), f2->parse_word("b")};
    for (const auto& ell : ells) {
      std::optional<Rational> prev_l, prev_k;
      for (int r : radii) {
        auto source = cayley_ball(f2, gens, r);
        auto tree = build_pushout(zz_amalgam(r, 2 * r + 1, ell));
        std::vector<VertexId> phi(source.labels.size(), kNoVertex);
        for (VertexId v = 0; v < source.labels.size(); ++v) {
          Element g = tree.group->parse_word(f2->format(source.labels[v].elem));
          if (auto img = tree.act(g, tree.z)) phi[v] = *img;
        }
        auto rep = schwarz_milnor_probe(*source.metric, source.element_vertices(r / 2), *tree.tos.z,
                                        group_tree_core(tree, r / 2), phi);
        std::string key = "ell=" + ell.str() + ".r=" + std::to_string(r);
        o.values.emplace_back(key + ".lambda", rep.lambda);
        o.values.emplace_back(key + ".k", rep.k);
        o.values.emplace_back(key + ".density", rep.density);
        o.values.emplace_back(key + ".pairs", Rational(static_cast<std::int64_t>(rep.pairs)));
        if (rep.not_qi) {
          o.passed = false;
          o.notes.push_back(key + ": lower bound degenerate (NotQI)");
        }
        if ((prev_l && rep.lambda > *prev_l) || (prev_k && rep.k > *prev_k)) {
          o.passed = false;
          o.notes.push_back(key + ": constants increased over the previous radius");
        }
        prev_l = rep.lambda;
        prev_k = rep.k;
      }
    }
    o.notes.push_back("source: Cayley ball of F2 on {a, b}; target: the pushout at the same radius; cores at r/2");
    return o;
  };
  return h;
}

Handlers hnn_z2(Context& c) {
  int r = c.cfg.radius.value_or(3);
  int tr = c.cfg.tree_radius.value_or(1);
  int core = c.cfg.core_radius.value_or(1);
  std::vector<Rational> ells = c.cfg.spike_lengths.empty() ? std::vector<Rational>{Rational(1)} : c.cfg.spike_lengths;
  auto trees = std::make_shared<std::vector<std::pair<std::string, GroupTree>>>();
  for (const auto& ell : ells) {
    trees->emplace_back("ell=" + ell.str(), build_coalescence(z2_hnn(r, tr, ell)));
    c.out.files.emplace_back("coalescence_" + std::to_string(trees->size() - 1) + ".tos",
                             tree_of_spaces_to_string(trees->back().second.tos));
  }
  c.core_radius = core;
  c.out.facts = {{"radius", Rational(r)}, {"tree_radius", Rational(tr)}, {"core_radius", Rational(core)},
                 {"z_vertices", Rational(static_cast<std::int64_t>(trees->front().second.tos.graph().vertex_count()))}};
  Handlers h;
  h["structural"] = [trees, core](const CheckSpec&) {
    CheckOutcome all;
    all.name = "structural";
    for (const auto& [tag, t] : *trees) {
      auto o = structural_outcome(t, core, tag);
      all.passed = all.passed && o.passed;
      all.values.insert(all.values.end(), o.values.begin(), o.values.end());
      all.notes.insert(all.notes.end(), o.notes.begin(), o.notes.end());
    }
    return all;
  };
  h["equivariance"] = [trees, core, &c](const CheckSpec&) {
    CheckOutcome all;
    all.name = "equivariance";
    for (const auto& [tag, t] : *trees) {
      auto o = equivariance_outcome(t, family_mode(c.cfg), core, tag);
      all.passed = all.passed && o.passed;
      all.values.insert(all.values.end(), o.values.begin(), o.values.end());
      all.notes.insert(all.notes.end(), o.notes.begin(), o.notes.end());
    }
    return all;
  };
  return h;
}

// ---- relative properness ---------------------------------------------------

Handlers properness(Context& c, GroupSetup gs) {
  int R = c.cfg.radius.value_or(8);
  std::vector<int> radii = c.cfg.radii.empty() ? std::vector<int>{1, 2, 3, 4} : c.cfg.radii;
  ConedCayleySpec target_spec;
  target_spec.generators = gs.generators;
  target_spec.peripherals = gs.cone_peripherals;
  target_spec.cone_length = c.cfg.cone_length.value_or(Rational(1, 2));
  target_spec.radius = R;
  ConedCayleySpec measure_spec = target_spec;
  measure_spec.peripherals = gs.peripherals;
  auto same_family = [](const std::vector<Subgroup>& x, const std::vector<Subgroup>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].generators != y[i].generators) return false;
    return true;
  };
  bool same = same_family(gs.cone_peripherals, gs.peripherals);
  auto target = std::make_shared<const CayleySpace>(coned_cayley_ball(gs.group, target_spec));
  auto measure = same ? target : std::make_shared<const CayleySpace>(coned_cayley_ball(gs.group, measure_spec));
  c.core_radius = R / 2;
  c.out.facts = {{"radius", Rational(R)},
                 {"target_vertices", Rational(static_cast<std::int64_t>(target->graph().vertex_count()))},
                 {"measure_vertices", Rational(static_cast<std::int64_t>(measure->graph().vertex_count()))}};
  // the probe rows are shared by both verdicts
  auto rows = std::make_shared<std::vector<ProperProbeReport>>();
  auto run = [rows, target, measure, radii, &c]() {
    if (!rows->empty()) return;
    SpaceLabel base{PointKind::Element, 0, target->group->identity()};
    unsigned jobs = resolve_jobs(c.cfg.jobs.value_or(0));
    for (int r : radii) rows->push_back(relative_properness_probe(*measure, *target, base, r, jobs));
  };
  auto fill = [rows](CheckOutcome& o) {
    for (const auto& p : *rows) {
      std::string key = "r=" + std::to_string(p.r);
      o.values.emplace_back(key + ".returning", Rational(static_cast<std::int64_t>(p.returning)));
      o.values.emplace_back(key + ".boundary_hits", Rational(static_cast<std::int64_t>(p.boundary_hits)));
      o.values.emplace_back(key + ".diameter", p.diameter.value);
      o.values.emplace_back(key + ".reachable", Rational(p.diameter.reachable ? 1 : 0));
      o.notes.push_back(key + ": diameter " + p.diameter.value.str() + " between " + p.witness_a + " and " +
                        p.witness_b);
    }
  };
  Handlers h;
  h["properness-finite"] = [run, rows, fill, same](const CheckSpec&) {
    run();
    CheckOutcome o;
    o.name = "properness-finite";
    o.probe = true;
    fill(o);
    // finite relative diameter: every pair of V_r is joined in the coned-off
    // graph; d(x, g x) <= r for all members also caps it at 2r when the
    // measuring graph is the target
    for (const auto& p : *rows) {
      if (!p.diameter.reachable) {
        o.passed = false;
        o.notes.push_back("r=" + std::to_string(p.r) + ": V_r has members in different components");
      } else if (same && p.diameter.value > Rational(2 * p.r)) {
        o.passed = false;
        o.notes.push_back("r=" + std::to_string(p.r) + ": diameter exceeds 2r");
      }
    }
    return o;
  };
  h["properness-growth"] = [run, rows, fill](const CheckSpec&) {
    run();
    CheckOutcome o;
    o.name = "properness-growth";
    o.probe = true;
    fill(o);
    for (std::size_t i = 1; i < rows->size(); ++i) {
      if (!((*rows)[i].diameter.value > (*rows)[i - 1].diameter.value)) {
        o.passed = false;
        o.notes.push_back("not strictly increasing at r=" + std::to_string((*rows)[i].r));
      }
    }
    return o;
  };
  return h;
}

Handlers z3_relative(Context& c) {
  return properness(c, group_setup(c.cfg, GroupSpec::free_abelian(3, {"x", "y", "z"}), {"x", "y", "z"},
                                   {{"H", {"x", "y"}}}, {{"H", {"x", "y"}}, {"K", {"x"}}}));
}

Handlers f2xz_relative(Context& c) {
  return properness(c, group_setup(c.cfg, f2xz_spec(), {"a", "b", "z"}, {{"A", {"a"}}}, {}));
}

// ---- spherical-cone --------------------------------------------------------

Handlers spherical_cone(Context& c) {
  int count = c.cfg.count.value_or(100);
  int n = 8;  // unit path p0 .. p7, long enough for d_X beyond 2 pi
  Rational D = c.cfg.cone_radius.value_or(Rational(4));
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1, Rational(1));
  auto x = make_metric(std::move(b).build());
  ConeSpec spec;
  spec.base = x;
  spec.cones.push_back({"s", ConeMetric::Spherical, D, {0, static_cast<VertexId>(n - 1)}});
  auto space = std::make_shared<const SphericalConedSpace>(spec, std::make_shared<const CanonicalCombing>(x));
  c.out.files.emplace_back("cone_spec.txt", cone_spec_to_string(spec));
  c.out.facts = {{"triples", Rational(count)}, {"D", D}};
  c.core_radius = -1;
  struct Triple {
    double s, t;
    GraphPoint zb;
    double dX;
  };
  auto triples = std::make_shared<std::vector<Triple>>();
  Rng rng(derive_seed(c.seed, "spherical-triples"));
  const std::int64_t den = 1 << 20;
  for (int i = 0; i < count; ++i) {
    double s = rng.unit(), t = rng.unit();
    std::int64_t k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>((n - 1) * den)));
    Rational pos(k, den);
    std::int64_t e = k / den;
    GraphPoint zb = GraphPoint::on_edge(x->graph(), static_cast<EdgeId>(e), pos - Rational(e));
    triples->push_back({s, t, zb, pos.to_double()});
  }
  // planar development: (x, s) at polar (D s, 0), (y, t) at (D t, min(d_X, pi))
  auto developed = [](double Dd, double s, double t, double dX) {
    double theta = std::min(dX, std::numbers::pi);
    return std::abs(std::polar(Dd * s, 0.0) - std::polar(Dd * t, theta));
  };
  Handlers h;
  h["formula"] = [space, triples, developed, D](const CheckSpec& s) {
    CheckOutcome o;
    o.name = "formula";
    o.probe = true;
    double tol = prof(s, "tol", Rational(1, 1000000000)).to_double();
    double worst = 0;
    for (const auto& tr : *triples) {
      double got = space->cone_distance(0, GraphPoint::at_vertex(0), tr.s, tr.zb, tr.t);
      worst = std::max(worst, std::abs(got - developed(D.to_double(), tr.s, tr.t, tr.dX)));
    }
    o.passed = worst <= tol;
    o.values = {{"triples", Rational(static_cast<std::int64_t>(triples->size()))}};
    char buf[64];
    std::snprintf(buf, sizeof buf, "max error %.3e (tolerance %.1e)", worst, tol);
    o.notes.push_back(buf);
    return o;
  };
  h["through-apex"] = [space, triples, D](const CheckSpec& s) {
    CheckOutcome o;
    o.name = "through-apex";
    o.probe = true;
    double tol = prof(s, "tol", Rational(1, 1000000000000)).to_double();
    double worst = 0;
    std::int64_t cases = 0;
    for (const auto& tr : *triples) {
      if (tr.dX < std::numbers::pi) continue;
      ++cases;
      double got = space->cone_distance(0, GraphPoint::at_vertex(0), tr.s, tr.zb, tr.t);
      worst = std::max(worst, std::abs(got - D.to_double() * (tr.s + tr.t)));
    }
    o.passed = worst <= tol && cases > 0;
    o.values = {{"cases", Rational(cases)}};
    char buf[64];
    std::snprintf(buf, sizeof buf, "max error %.3e (tolerance %.1e)", worst, tol);
    o.notes.push_back(buf);
    return o;
  };
  return h;
}

// ---- combination -----------------------------------------------------------

Handlers combination(Context& c) {
  std::vector<int> sizes = c.cfg.sizes.empty() ? std::vector<int>{8, 6} : c.cfg.sizes;
  std::vector<Rational> ells = c.cfg.spike_lengths.empty()
                                   ? std::vector<Rational>{Rational(1, 2), Rational(1), Rational(2)}
                                   : c.cfg.spike_lengths;
  int core_radius = c.cfg.core_radius.value_or(4);
  struct Built {
    std::string tag;
    CombinationFixture f;
  };
  auto built = std::make_shared<std::vector<Built>>();
  for (const auto& ell : ells) {
    built->push_back({"ell=" + ell.str(), build_combination(sizes, ell, core_radius, family_mode(c.cfg))});
    c.out.files.emplace_back("combination_" + std::to_string(built->size() - 1) + ".tos",
                             tree_of_spaces_to_string(*built->back().f.tos));
  }
  c.core_radius = core_radius;
  c.out.facts = {{"pieces", Rational(static_cast<std::int64_t>(sizes.size()))},
                 {"core_radius", Rational(core_radius)},
                 {"core", Rational(static_cast<std::int64_t>(built->front().f.core.size()))}};

  // Vertex-space constants per spike length: quasi-geodesic (1, c), gcc at E,
  // bounded at c1 with lambda = 1, consistency K.
  struct Pieces {
    Rational E, c1, qg_c, C, c2, K;
    std::vector<CertReport> reports;
    std::vector<std::shared_ptr<const Combing>> combings;
    std::vector<std::string> tags;
  };
  auto pieces = std::make_shared<std::map<std::string, Pieces>>();
  auto measure_pieces = [built, pieces, &c](const Rational& E, const Rational& c1) {
    for (const auto& b : *built) {
      if (pieces->count(b.tag)) continue;
      Pieces p{E, c1, Rational(0), Rational(0), Rational(0), Rational(0), {}, {}, {}};
      for (std::size_t k = 0; k < b.f.tos->k_count(); ++k) {
        const auto& local = b.f.family->local(k);
        auto g = local.combing;
        auto core = all_vertices(g->graph());
        std::string tag = b.tag + ".X" + std::to_string(k);
        SamplePlan plan = c.plan("pieces/" + tag, E);
        plan.sweep = with_value(plan.sweep, c1);
        // measure at zero, then certify each piece at its own minimum
        Rational qc = minimal_at(check_quasigeodesic(*g, core, Rational(1), Rational(0), plan), Rational(1));
        auto qg = check_quasigeodesic(*g, core, Rational(1), qc, plan);
        Rational gc = minimal_at(check_gcc(*g, core, E, Rational(0), plan), E);
        auto gcc = check_gcc(*g, core, E, gc, plan);
        Rational bc = minimal_at(check_bounded(*g, core, Rational(1), qc, c1, Rational(0), plan), c1);
        auto bd = check_bounded(*g, core, Rational(1), qc, c1, bc, plan);
        Rational kc = consistency_min(check_consistency(*g, core, Rational(0), plan));
        auto cons = check_consistency(*g, core, kc, plan);
        p.qg_c = max(p.qg_c, qc);
        p.C = max(p.C, gc);
        p.c2 = max(p.c2, bc);
        p.K = max(p.K, kc);
        for (auto* r : {&qg, &gcc, &bd, &cons}) {
          p.reports.push_back(*r);
          p.combings.push_back(g);
          p.tags.push_back(tag);
        }
      }
      (*pieces)[b.tag] = std::move(p);
    }
  };
  Handlers h;
  h["pieces"] = [built, pieces, measure_pieces](const CheckSpec& s) {
    measure_pieces(prof(s, "E", Rational(1)), prof(s, "c1", Rational(1)));
    OutcomeBuilder b("pieces");
    for (const auto& bt : *built) {
      const auto& p = pieces->at(bt.tag);
      b.out.values.emplace_back(bt.tag + ".qg_c", p.qg_c);
      b.out.values.emplace_back(bt.tag + ".E", p.E);
      b.out.values.emplace_back(bt.tag + ".C", p.C);
      b.out.values.emplace_back(bt.tag + ".c1", p.c1);
      b.out.values.emplace_back(bt.tag + ".c2", p.c2);
      b.out.values.emplace_back(bt.tag + ".K", p.K);
      for (std::size_t i = 0; i < p.reports.size(); ++i) b.add(p.reports[i], p.tags[i], p.combings[i]);
    }
    // certified at their own minima; the values feed the combined budgets
    b.out.notes.push_back("vertex-space constants are the measured minima over each X_k");
    return b.finish();
  };
  auto combined = [built, pieces, measure_pieces, &c](
                      const std::string& name, const CheckSpec& s,
                      const std::function<CertReport(const CombinationFixture&, const Pieces&, const SamplePlan&,
                                                     std::vector<std::pair<std::string, Rational>>&)>& f) {
    measure_pieces(prof(s, "E", Rational(1)), prof(s, "c1", Rational(1)));
    OutcomeBuilder b(name);
    for (const auto& bt : *built) {
      std::vector<std::pair<std::string, Rational>> budget;
      const Pieces& p = pieces->at(bt.tag);
      SamplePlan plan = c.plan(name + "/" + bt.tag, p.E + Rational(2));
      plan.sweep = with_value(plan.sweep, p.c1);
      b.add(f(bt.f, p, plan, budget), bt.tag, bt.f.gamma);
      for (const auto& [k, v] : budget) b.out.values.emplace_back(bt.tag + "." + k, v);
    }
    return b.finish();
  };
  h["combined-qg"] = [combined](const CheckSpec& s) {
    return combined("combined-qg", s, [](const CombinationFixture& f, const Pieces& p, const SamplePlan& plan,
                                         std::vector<std::pair<std::string, Rational>>& out) {
      out = {{"lambda", Rational(1)}, {"budget_2c", Rational(2) * p.qg_c}};
      auto r = check_quasigeodesic(*f.gamma, f.core, Rational(1), Rational(2) * p.qg_c, plan);
      out.emplace_back("measured_c", minimal_at(r, Rational(1)));
      return r;
    });
  };
  h["combined-bounded"] = [combined](const CheckSpec& s) {
    return combined("combined-bounded", s, [](const CombinationFixture& f, const Pieces& p, const SamplePlan& plan,
                                              std::vector<std::pair<std::string, Rational>>& out) {
      // (lambda, k, c1, c2) = (1, qg_c, c1, c2) gives (1, 2k, c1, 2k + c1 + c2)
      Rational k2 = Rational(2) * p.qg_c, c1 = p.c1, c2 = k2 + p.c1 + p.c2;
      out = {{"budget_k", k2}, {"budget_c1", c1}, {"budget_c2", c2}};
      auto r = check_bounded(*f.gamma, f.core, Rational(1), k2, c1, c2, plan);
      out.emplace_back("measured_c2", minimal_at(r, c1));
      return r;
    });
  };
  h["combined-gcc"] = [combined](const CheckSpec& s) {
    return combined("combined-gcc", s, [](const CombinationFixture& f, const Pieces& p, const SamplePlan& plan,
                                          std::vector<std::pair<std::string, Rational>>& out) {
      Rational E2 = p.E + Rational(2), budget = Rational(6) * p.C;
      out = {{"E", E2}, {"budget_6C", budget}};
      auto r = check_gcc(*f.gamma, f.core, E2, budget, plan);
      out.emplace_back("measured_C", minimal_at(r, E2));
      return r;
    });
  };
  h["combined-consistency"] = [combined](const CheckSpec& s) {
    return combined("combined-consistency", s,
                    [](const CombinationFixture& f, const Pieces& p, const SamplePlan& plan,
                       std::vector<std::pair<std::string, Rational>>& out) {
                      out = {{"budget_K", p.C}};
                      auto r = check_consistency(*f.gamma, f.core, p.C, plan);
                      out.emplace_back("measured_K", consistency_min(r));
                      return r;
                    });
  };
  return h;
}

Handlers build_handlers(Context& c) {
  const std::string& n = c.cfg.scenario;
  if (n == "tree-sanity") return tree_sanity(c);
  if (n == "cycle6-sufficiency") return cycle_sufficiency(c);
  if (n == "f2xz-coned") return f2xz_coned(c);
  if (n == "amalgam-f2") return amalgam_f2(c);
  if (n == "hnn-z2") return hnn_z2(c);
  if (n == "z3-relative") return z3_relative(c);
  if (n == "f2xz-relative") return f2xz_relative(c);
  if (n == "spherical-cone") return spherical_cone(c);
  if (n == "combination") return combination(c);
  throw Error(ErrorCode::UnknownScenario, "no scenario named '" + n + "'");
}

using nlohmann::json;

json rational_map(const std::vector<std::pair<std::string, Rational>>& kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v.str();
  return j;
}

void collect_witnesses(const CertReport& r, const MetricGraph* g, json& out) {
  if (!r.certified && r.witness) {
    json w;
    w["property"] = r.property;
    w["text"] = r.witness_text;
    json tuple = json::array();
    for (VertexId v : r.witness->tuple) tuple.push_back(g ? g->label(v) : std::to_string(v));
    w["tuple"] = tuple;
    json params = json::array();
    for (const auto& x : r.witness->params) params.push_back(x.str());
    w["params"] = params;
    w["required"] = r.witness->required.str();
    w["bound"] = r.witness->bound.str();
    w["multiplier"] = r.witness->multiplier.str();
    out.push_back(w);
  }
  for (const auto& part : r.parts) collect_witnesses(part, g, out);
}

void render(ScenarioResult& res, const std::vector<MetricGraph const*>& graphs) {
  json report;
  report["scenario"] = res.scenario;
  report["seed"] = res.seed;
  report["exit_code"] = res.exit_code;
  if (!res.error.empty()) report["error"] = res.error;
  report["facts"] = rational_map(res.facts);
  json checks = json::array();
  std::string csv = std::string(sweep_csv_header()) + "\n";
  json witnesses = json::array();
  std::size_t gi = 0;
  for (const auto& c : res.checks) {
    json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["probe"] = c.probe;
    jc["values"] = rational_map(c.values);
    jc["notes"] = c.notes;
    json reps = json::array();
    for (std::size_t i = 0; i < c.reports.size(); ++i, ++gi) {
      json jr;
      jr["fixture"] = c.report_fixtures[i];
      jr["report"] = json::parse(c.report_json[i]);
      reps.push_back(jr);
      for (const auto& row : sweep_csv_rows(c.report_fixtures[i], c.reports[i])) csv += row + "\n";
      if (!c.reports[i].certified) {
        json found = json::array();
        collect_witnesses(c.reports[i], graphs[gi], found);
        std::string why;
        bool replayed = c.replay ? c.replay(i, &why) : false;
        for (auto& w : found) {
          w["check"] = c.name;
          w["fixture"] = c.report_fixtures[i];
          w["replayed"] = replayed;
          if (!why.empty()) w["replay_note"] = why;
          witnesses.push_back(w);
        }
      }
    }
    jc["reports"] = reps;
    if (!c.passed && c.reports.empty()) {
      json w;
      w["check"] = c.name;
      w["notes"] = c.notes;
      witnesses.push_back(w);
    }
    checks.push_back(jc);
  }
  report["checks"] = checks;
  res.files.emplace_back("report.json", report.dump(2) + "\n");
  res.files.emplace_back("sweep.csv", csv);
  if (res.exit_code == kExitCertFailed) res.files.emplace_back("witnesses.json", witnesses.dump(2) + "\n");
  std::sort(res.files.begin(), res.files.end());
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ConfigError:
    case ErrorCode::ParameterOutOfRange:
    case ErrorCode::UnknownScenario:
      return kExitConfig;
    default:
      return kExitBuild;
  }
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg, RunMode mode) {
  ScenarioResult res;
  res.scenario = cfg.scenario;
  const ScenarioInfo* info = find_scenario(cfg.scenario);
  auto fail = [&res](int code, const std::string& why) {
    res.exit_code = code;
    res.error = why;
    res.files.clear();
    return res;
  };
  if (!info) return fail(kExitConfig, "UnknownScenario: no scenario named '" + cfg.scenario + "'");
  if (info->sampled && !cfg.seed) return fail(kExitConfig, "ConfigError: scenario " + cfg.scenario + " needs a seed");
  res.seed = cfg.seed.value_or(0);

  std::vector<CheckSpec> requested;
  for (const auto& c : cfg.checks) {
    if (std::find(info->checks.begin(), info->checks.end(), c.name) == info->checks.end())
      return fail(kExitConfig, "ConfigError: scenario " + cfg.scenario + " has no check '" + c.name + "'");
    requested.push_back(c);
  }
  if (requested.empty())
    for (const auto& n : info->checks) requested.push_back({n, {}});
  if (mode == RunMode::Probe) {
    std::vector<CheckSpec> probes;
    for (const auto& c : requested)
      if (std::find(info->probes.begin(), info->probes.end(), c.name) != info->probes.end()) probes.push_back(c);
    if (probes.empty())
      for (const auto& n : info->probes) probes.push_back({n, {}});
    requested = std::move(probes);
  }

  Context ctx{cfg, res.seed, -1, res};
  Handlers handlers;
  try {
    handlers = build_handlers(ctx);
  } catch (const Error& e) {
    return fail(exit_for(e), e.what());
  } catch (const std::exception& e) {
    return fail(kExitBuild, std::string("BuildError: ") + e.what());
  }

  std::vector<MetricGraph const*> graphs;
  if (mode != RunMode::Build) {
    for (const auto& spec : requested) {
      CheckOutcome o;
      try {
        o = handlers.at(spec.name)(spec);
      } catch (const Error& e) {
        if (exit_for(e) == kExitConfig) return fail(kExitConfig, e.what());
        o = CheckOutcome{};
        o.name = spec.name;
        o.passed = false;
        o.notes.push_back(e.what());
      } catch (const std::exception& e) {
        return fail(kExitBuild, std::string("BuildError: ") + e.what());
      }
      res.checks.push_back(std::move(o));
    }
  }
  for (const auto& c : res.checks)
    if (!c.passed) res.exit_code = kExitCertFailed;
  // the witness renderer needs the fixture graph per report
  for (const auto& c : res.checks)
    for (std::size_t i = 0; i < c.reports.size(); ++i) graphs.push_back(c.graph_of ? c.graph_of(i) : nullptr);
  render(res, graphs);
  return res;
}

void write_result(const ScenarioResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, body] : result.files) {
    std::ofstream os(std::filesystem::path(dir) / name, std::ios::binary);
    if (!os) throw Error(ErrorCode::ConfigError, "cannot write " + (std::filesystem::path(dir) / name).string());
    os << body;
  }
}

}  // namespace ccl
