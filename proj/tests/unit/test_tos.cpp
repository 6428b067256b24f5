#include <map>
#include <set>
#include <unordered_map>

#include "ccl/core/error.hpp"
#include "ccl/tos/combined.hpp"
#include "ccl/tos/group_trees.hpp"
#include "ccl/tos/spike.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccl;

namespace {

AmalgamSpec zz_spec(int r, int tree_r, Rational ell = Rational(1)) {
  AmalgamSpec s;
  s.a = {make_group(GroupSpec::free(1, {"a"})), false, {}, "A"};
  s.b = {make_group(GroupSpec::free(1, {"b"})), false, {}, "B"};
  s.radius = r;
  s.tree_radius = tree_r;
  s.spike_length = ell;
  return s;
}

HnnSpec z2_hnn(int r, int tree_r) {
  HnnSpec s;
  s.base = {make_group(GroupSpec::free_abelian(2)), true, {}, "X"};
  s.x = {PointKind::Element, 0, s.base.group->identity()};
  s.y = {PointKind::Midpoint, 1, s.base.group->identity()};
  s.radius = r;
  s.tree_radius = tree_r;
  return s;
}

// reduced words in a^{+-1}, b^{+-1} of length <= r, letters +-1 (a), +-2 (b)
std::vector<std::vector<int>> reduced_words(int r) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == r) continue;
    for (int l : {1, -1, 2, -2}) {
      if (!out[i].empty() && out[i].back() == -l) continue;
      auto w = out[i];
      w.push_back(l);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("spike over the Cayley graph of Z") {
  auto z = make_group(GroupSpec::free(1, {"a"}));
  auto x = cayley_ball(z, {z->generator(0)}, 3);
  auto sp = build_spike(x, {{{PointKind::Element, 0, z->identity()}, {"C", {}}}}, Rational(1, 2));
  CHECK(sp.spikes.size() == 7);
  std::set<VertexId> attach;
  for (const auto& s : sp.spikes) attach.insert(s.attach);
  CHECK(attach.size() == 7);
  const auto& g = sp.metric->graph();
  for (const auto& s : sp.spikes) CHECK(g.neighbors(s.tip).size() == 1);
  // d(spike(u), spike(v)) = l + d_X(u,v) + l
  auto d0 = oracle::sssp(g, sp.spikes[0].tip);
  for (const auto& s : sp.spikes) {
    if (s.tip == sp.spikes[0].tip) continue;
    CHECK(*d0[s.tip] == Rational(1) + x.metric->distance(sp.spikes[0].attach, s.attach));
  }
  for (VertexId u = 0; u < sp.base_count; ++u)
    for (VertexId v = 0; v < sp.base_count; ++v) CHECK(sp.metric->distance(u, v) == x.metric->distance(u, v));
  CHECK_THROWS_AS(build_spike(x, {{{PointKind::Element, 0, z->identity()}, {"C", {"a"}}}}, Rational(1)), Error);
}

TEST_CASE("spike at a cone apex: full stabilizer versus trivial C") {
  auto z2 = make_group(GroupSpec::free_abelian(2));
  ConedCayleySpec spec;
  spec.generators = {z2->generator(0), z2->generator(1)};
  spec.peripherals = {{"H", {"x"}}};
  spec.radius = 2;
  auto x = coned_cayley_ball(z2, spec);
  SpaceLabel apex{PointKind::Apex, 0, z2->identity()};
  auto full = build_spike(x, {{apex, {"H", {"x"}}}}, Rational(1));
  auto trivial = build_spike(x, {{apex, {"C", {}}}}, Rational(1));
  // one spike per apex in the orbit with C = H
  std::set<VertexId> attach;
  for (const auto& s : full.spikes) attach.insert(s.attach);
  CHECK(attach.size() == full.spikes.size());
  // with C trivial the apex of H carries one spike per tabled x^k: k = -2..2
  std::size_t at_base = 0;
  VertexId base = *x.find(apex);
  for (const auto& s : trivial.spikes) at_base += s.attach == base;
  CHECK(at_base == 5);
}

TEST_CASE("Z * Z pushout matches an independent F2 spike graph") {
  for (Rational ell : {Rational(1, 2), Rational(1), Rational(2)}) {
    const int r = 3;
    auto tree = build_pushout(zz_spec(r, 2 * r + 1, ell));
    const auto& g = *tree.group;
    // oracle: three points per word (A-side, B-side, gluing point)
    auto words = reduced_words(r);
    std::unordered_map<Element, int, ElementHash> id;
    auto elem = [&](const std::vector<int>& w) {
      Element e = g.identity();
      for (int l : w) e = g.multiply(e, l > 0 ? g.generator(l - 1) : g.inverse(g.generator(-l - 1)));
      return e;
    };
    for (const auto& w : words) id.emplace(elem(w), static_cast<int>(id.size()));
    int n = static_cast<int>(id.size());
    std::vector<oracle::E> edges;
    for (const auto& w : words) {
      int i = id.at(elem(w));
      edges.push_back({i, 2 * n + i, ell});
      edges.push_back({n + i, 2 * n + i, ell});
      for (int l : {1, 2}) {
        auto it = id.find(g.multiply(elem(w), g.generator(l - 1)));
        if (it == id.end()) continue;
        edges.push_back(l == 1 ? oracle::E{i, it->second, Rational(1)} : oracle::E{n + i, n + it->second, Rational(1)});
      }
    }
    auto fw = oracle::floyd(3 * n, edges);
    REQUIRE(tree.tos.graph().vertex_count() == static_cast<std::size_t>(3 * n));
    std::vector<int> to_oracle;
    for (const auto& l : tree.labels) to_oracle.push_back(l.side * n + id.at(l.elem));
    for (VertexId u = 0; u < tree.labels.size(); ++u)
      for (VertexId v = 0; v < tree.labels.size(); ++v)
        REQUIRE(tree.tos.z->distance(u, v) == *fw[to_oracle[u]][to_oracle[v]]);
  }
}

TEST_CASE("Z * Z pushout structure") {
  auto tree = build_pushout(zz_spec(4, 9));
  const auto& tos = tree.tos;
  auto report = structural_suite(tos, group_tree_core(tree, 2));
  for (const auto& f : report.findings) CHECK_MESSAGE(f.passed, f.check << ": " << f.witness);
  CHECK(spike_identification_check(tree).passed);
  auto stab = stabilizer_bookkeeping(tree);
  CHECK(stab.passed);
  CHECK(stab.witness.find("expected {1}") != std::string::npos);
  // xi^-1(xi(z)) = {z}; X_A is one T vertex
  std::size_t count = 0;
  for (VertexId v : tos.xi) count += v == tos.xi[tree.z];
  CHECK(count == 1);
  // the base copy of X_A (points a^k on side 0) is a single T vertex
  std::set<VertexId> images;
  for (VertexId v = 0; v < tree.labels.size(); ++v) {
    const auto& l = tree.labels[v];
    auto syl = tree.group->syllables(l.elem);
    if (l.side == 0 && (syl.empty() || (syl.size() == 1 && syl[0].factor == 0))) images.insert(tos.xi[v]);
  }
  CHECK(images.size() == 1);
}

TEST_CASE("HNN of Z^2 with trivial associated subgroup") {
  const int r = 3;
  auto tree = build_coalescence(z2_hnn(r, 1));
  const auto& g = *tree.group;
  Element t = g.embed(1, g.factor(1).generator(0));
  // the gluing point of 1 joins y in copy 1 and x in copy t
  std::set<std::string> around;
  for (const auto& inc : tree.tos.graph().neighbors(tree.z)) around.insert(tree.describe(inc.neighbor));
  auto at_y = tree.index.at({0, PointKind::Midpoint, 1, g.identity()});
  auto at_tx = tree.index.at({0, PointKind::Element, 0, t});
  CHECK(around == std::set<std::string>{tree.describe(at_y), tree.describe(at_tx)});

  // lattice brute force for the subdivided diamond of radius rho
  auto elements = [](int rho) { return 2 * rho * rho + 2 * rho + 1; };
  auto edges_dir = [](int rho) {
    int n = 0;
    for (int i = -rho; i <= rho; ++i)
      for (int j = -rho; j <= rho; ++j)
        if (std::abs(i) + std::abs(j) <= rho && std::abs(i) + std::abs(j + 1) <= rho) ++n;
    return n;
  };
  // copies: 1; a t with |a| <= r - 1 (glued at their x); a t^-1 glued at
  // their y, a midpoint, which needs local radius >= 1, so |a| <= r - 2
  std::size_t copies = 1 + static_cast<std::size_t>(elements(r - 1) + elements(r - 2));
  CHECK(tree.tos.k_count() == copies);
  std::size_t copy_points = 0, attachments = 0;
  for (std::size_t k = 0; k < tree.tos.k_count(); ++k) {
    int rho = tree.copy_radius[k];
    copy_points += static_cast<std::size_t>(elements(rho) + 2 * edges_dir(rho));
    attachments += static_cast<std::size_t>(elements(rho) + edges_dir(rho));
  }
  std::size_t tips = tree.tos.graph().vertex_count() - copy_points;
  std::size_t spike_edges = 0;
  for (const auto& e : tree.tos.graph().edges())
    spike_edges += tree.labels[e.u].side == 2 || tree.labels[e.v].side == 2;
  CHECK(spike_edges == attachments);
  CHECK(tips == tree.tos.tree->vertex_count() - copies);

  auto report = structural_suite(tree.tos, group_tree_core(tree, 1));
  for (const auto& f : report.findings) CHECK_MESSAGE(f.passed, f.check << ": " << f.witness);
  CHECK(spike_identification_check(tree).passed);
  CHECK(stabilizer_bookkeeping(tree).passed);
}

TEST_CASE("HNN basepoints in one orbit are rejected") {
  HnnSpec s;
  s.base = {make_group(GroupSpec::free(1, {"a"})), false, {}, "X"};
  s.x = {PointKind::Element, 0, s.base.group->identity()};
  s.y = {PointKind::Element, 0, s.base.group->generator(0)};
  try {
    build_coalescence(s);
    FAIL("expected SameOrbitBasepoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SameOrbitBasepoints);
  }
  CHECK_THROWS_AS(build_pushout(zz_spec(0, 1)), Error);
}

TEST_CASE("combined combing on two glued unit segments") {
  auto seg = [] {
    GraphBuilder b;
    b.add_vertex("end");
    b.add_vertex("glue");
    b.add_edge(0, 1, Rational(1));
    return std::make_shared<const MetricGraph>(std::move(b).build());
  };
  auto tos = std::make_shared<const TreeOfSpaces>(
      glue_tree_of_spaces({{seg(), "X1"}, {seg(), "X2"}}, {{"p", {{0, 1}, {1, 1}}}}, Rational(1, 1000)));
  CombinedCombing gamma(tos, canonical_family(tos, FamilyMode::Transported));
  VertexId v = 0, w = 2, p = 4;
  auto path = gamma.path(v, w);
  CHECK(path.length() == Rational(2) + Rational(2, 1000));
  CHECK(eval_path(tos->graph(), path, Rational(1, 2)) == GraphPoint::at_vertex(p));
  auto bp = path.breakpoints();
  CHECK(std::find(bp.begin(), bp.end(), Rational(1, 2)) != bp.end());
  CHECK(gamma.path(v, v).vertices == std::vector<VertexId>{v});
}

TEST_CASE("combined combing restricts to the vertex-space combings and is geodesic") {
  auto tree = build_pushout(zz_spec(3, 7));
  auto tos = std::make_shared<const TreeOfSpaces>(tree.tos);
  auto family = canonical_family(tos, FamilyMode::Transported);
  CombinedCombing gamma(tos, family);
  for (std::size_t k = 0; k < tos->k_count(); ++k)
    for (VertexId a : tos->vertex_space[k])
      for (VertexId b : tos->vertex_space[k]) REQUIRE(gamma.path(a, b).vertices == family->path(k, a, b).vertices);
  const auto& z = tos->graph();
  for (VertexId a = 0; a < z.vertex_count(); ++a)
    for (VertexId b = 0; b < z.vertex_count(); ++b) {
      auto p = gamma.path(a, b);
      REQUIRE(p.source() == a);
      REQUIRE(p.target() == b);
      REQUIRE(p.length() == tos->z->distance(a, b));
      // pieces concatenate by length, so the parametrization is by arclength
      for (const auto& [t, s] : p.knots) REQUIRE(s == t * p.length());
    }
}

TEST_CASE("equivariance: tie-breaks on the Z/4 cycle versus transported families") {
  auto c4 = make_group(GroupSpec::cyclic(4));
  auto x = cayley_ball(c4, {c4->generator(0)}, 2);
  CanonicalCombing canon(x.metric);
  auto table = generator_table(*c4, x.generators);
  auto action = make_ball_action(x, table);
  std::vector<std::string> names;
  for (const auto& e : table) names.push_back(c4->format(e));
  auto rep = combing_equivariance(canon, names, action.table);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations > 0);
  CHECK(!rep.witness.empty());

  // trivial action: vacuous pass
  std::vector<std::vector<VertexId>> id_row{{}};
  for (VertexId v = 0; v < x.graph().vertex_count(); ++v) id_row[0].push_back(v);
  CHECK(combing_equivariance(canon, {"1"}, id_row).ok);

  auto tree = build_pushout(zz_spec(4, 9));
  auto tos = std::make_shared<const TreeOfSpaces>(tree.tos);
  auto family = canonical_family(tos, FamilyMode::Transported);
  std::vector<Element> gens;
  std::vector<std::string> gnames;
  for (const auto& e : generator_table(*tree.group, {tree.group->generator(0), tree.group->generator(1)})) {
    gens.push_back(e);
    gnames.push_back(tree.group->format(e));
  }
  auto zaction = group_tree_action(tree, gens);
  auto fam = family_equivariance(*family, gnames, zaction);
  CHECK(fam.ok);
  CHECK(fam.checked > 0);
  CombinedCombing gamma(tos, family);
  auto comb = combing_equivariance(gamma, gnames, zaction, group_tree_core(tree, 2));
  CHECK_MESSAGE(comb.ok, comb.witness);
  CHECK(comb.checked > 0);
}

TEST_CASE("tree of spaces serialization round trip") {
  auto tree = build_pushout(zz_spec(2, 5));
  std::string text = tree_of_spaces_to_string(tree.tos);
  CHECK(text.find("xi ") != std::string::npos);
  CHECK(text.find("vspace ") != std::string::npos);
  auto back = tree_of_spaces_from_string(text);
  CHECK(tree_of_spaces_to_string(back) == text);
  CHECK(structural_suite(back).ok);
}
