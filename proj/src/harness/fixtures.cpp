#include "ccl/harness/fixtures.hpp"

#include <algorithm>

#include "ccl/core/error.hpp"
#include "ccl/core/rng.hpp"

namespace ccl {

std::shared_ptr<const DistanceOracle> cycle_graph(int n, const std::string& prefix) {
  if (n < 3) throw Error(ErrorCode::BuildError, "a cycle needs at least 3 vertices");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(prefix + std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n, Rational(1));
  return make_metric(std::move(b).build());
}

std::shared_ptr<const DistanceOracle> random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::BuildError, "a tree needs at least one vertex");
  Rng rng(seed);
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("t" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    auto parent = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(i)));
    b.add_edge(parent, i, Rational(static_cast<std::int64_t>(1 + rng.below(3)), 2));
  }
  return make_metric(std::move(b).build());
}

std::vector<VertexId> all_vertices(const MetricGraph& g) {
  std::vector<VertexId> v(g.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::shared_ptr<const Group> f2xz_group() {
  return make_group(GroupSpec::direct_product({GroupSpec::free(2, {"a", "b"}), GroupSpec::free_abelian(1, {"z"})}));
}

ConedFixture build_coned_fixture(const ConedFixtureSpec& s) {
  if (s.core_radius < 0 || 2 * s.core_radius > s.radius)
    throw Error(ErrorCode::BuildError, "core radius must lie in [0, radius/2]");
  ConedFixture f;
  f.core_radius = s.core_radius;
  ConedCayleySpec cs;
  cs.generators = s.generators;
  cs.peripherals = s.peripherals;
  cs.cone_length = s.cone_length;
  cs.radius = s.radius;
  f.x = std::make_shared<const CayleySpace>(coned_cayley_ball(s.group, cs));
  const auto& x = *f.x;
  auto elements = x.element_vertices(s.core_radius);
  f.x_core = elements;
  for (VertexId v : elements)
    for (const auto& inc : x.graph().neighbors(v))
      if (x.is_cone(inc.neighbor)) f.x_core.push_back(inc.neighbor);
  std::sort(f.x_core.begin(), f.x_core.end());
  f.x_core.erase(std::unique(f.x_core.begin(), f.x_core.end()), f.x_core.end());

  f.spec.base = x.metric;
  for (VertexId v : elements) {
    ConeLabel l;
    l.name = "cone(" + x.describe(x.labels[v]) + ")";
    l.metric = ConeMetric::Graph;
    l.D = s.D;
    l.attachments = {v};
    f.spec.cones.push_back(std::move(l));
  }
  f.validation = validate_cone_spec(f.spec);
  if (!f.validation.ok) {
    std::string why;
    for (const auto& fd : f.validation.findings)
      if (!fd.passed) why += fd.check + " [" + fd.witness + "] ";
    throw Error(ErrorCode::InvalidConeSpec, why);
  }
  f.space = std::make_shared<const ConedSpace>(build_coned_space(f.spec));
  f.base = std::make_shared<const CanonicalCombing>(x.metric);
  f.gamma_hat = std::make_shared<const ExtendedCombing>(f.space, f.base);
  f.core = f.x_core;
  for (VertexId a : f.space->apex) f.core.push_back(a);
  return f;
}

CombinationFixture build_combination(const std::vector<int>& sizes, const Rational& spike_length, int core_radius,
                                     FamilyMode mode) {
  if (sizes.size() != 2) throw Error(ErrorCode::BuildError, "the combination fixture glues exactly two pieces");
  if (spike_length.sign() <= 0) throw Error(ErrorCode::BuildError, "spike length must be positive");
  std::vector<SpaceCopy> copies;
  GluePointSpec glue{"p", {}};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto c = cycle_graph(sizes[i], "x" + std::to_string(i) + "_");
    copies.push_back({std::make_shared<const MetricGraph>(c->graph()), "X" + std::to_string(i)});
    glue.attachments.push_back({i, 0});
  }
  CombinationFixture f;
  f.tos = std::make_shared<const TreeOfSpaces>(glue_tree_of_spaces(copies, {glue}, spike_length));
  f.family = canonical_family(f.tos, mode);
  f.gamma = std::make_shared<const CombinedCombing>(f.tos, f.family);
  for (VertexId t = 0; t < f.tos->glue_point.size(); ++t)
    if (f.tos->glue_point[t] != kNoVertex) f.glue = f.tos->glue_point[t];
  f.core_radius = core_radius;
  const auto& z = *f.tos->z;
  for (VertexId v = 0; v < z.graph().vertex_count(); ++v)
    if (!(z.distance(f.glue, v) > Rational(core_radius))) f.core.push_back(v);
  return f;
}

AmalgamSpec zz_amalgam(int radius, int tree_radius, const Rational& spike_length) {
  AmalgamSpec s;
  s.a = {make_group(GroupSpec::free(1, {"a"})), false, {}, "A"};
  s.b = {make_group(GroupSpec::free(1, {"b"})), false, {}, "B"};
  s.radius = radius;
  s.tree_radius = tree_radius;
  s.spike_length = spike_length;
  return s;
}

HnnSpec z2_hnn(int radius, int tree_radius, const Rational& spike_length) {
  HnnSpec s;
  s.base = {make_group(GroupSpec::free_abelian(2)), true, {}, "X"};
  s.x = {PointKind::Element, 0, s.base.group->identity()};
  s.y = {PointKind::Midpoint, 1, s.base.group->identity()};
  s.radius = radius;
  s.tree_radius = tree_radius;
  s.spike_length = spike_length;
  return s;
}

}  // namespace ccl
