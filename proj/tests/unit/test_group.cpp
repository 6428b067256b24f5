#include <functional>
#include <set>
#include <string>

#include "ccl/core/error.hpp"
#include "ccl/group/probes.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccl;

namespace {

std::shared_ptr<const Group> f2xz() {
  return make_group(GroupSpec::direct_product({GroupSpec::free(2, {"a", "b"}), GroupSpec::free_abelian(1, {"z"})}));
}

std::vector<Element> gens(const Group& g, std::initializer_list<const char*> words) {
  std::vector<Element> out;
  for (auto w : words) out.push_back(g.parse_word(w));
  return out;
}

// independent free reduction on strings: lower case letter = generator,
// upper case = inverse
std::string reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() != c && std::tolower(out.back()) == std::tolower(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("normal forms") {
  auto g = f2xz();
  auto x = g->parse_word("a*b^-1*z^2*a");
  CHECK(g->format(x) == "a*b^-1*a*z^2");
  CHECK(g->is_identity(g->multiply(g->inverse(x), x)));
  CHECK(g->parse_word("1") == g->identity());
  CHECK_THROWS(g->parse_word("q"));
  auto fp = std::dynamic_pointer_cast<const FreeProductGroup>(
      make_group(GroupSpec::free_product({GroupSpec::free(1, {"a"}), GroupSpec::free(1, {"b"})})));
  REQUIRE(fp);
  auto y = fp->parse_word("a^2*b*a^-2");
  CHECK(fp->format(y) == "a^2*b*a^-2");
  CHECK(fp->is_identity(fp->multiply(y, fp->inverse(y))));
  CHECK(fp->syllables(y).size() == 3);
  CHECK(fp->word_length(y) == 5);
  auto [prefix, local] = fp->split_last(y, 0);
  CHECK(fp->format(prefix) == "a^2*b");
  CHECK(fp->factor(0).format(local) == "a^-2");
  CHECK_THROWS_AS(make_group(GroupSpec::free_product({GroupSpec::free(1, {"a"}), GroupSpec::free(1, {"a"})})), Error);
  auto c4 = make_group(GroupSpec::cyclic(4));
  CHECK(c4->format(c4->parse_word("c^5")) == "c");
  CHECK(c4->word_length(c4->parse_word("c^3")) == 1);
}

TEST_CASE("unsupported specs") {
  CHECK_THROWS_AS(make_group(GroupSpec::free(0)), Error);
  try {
    make_group(GroupSpec::cyclic(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedGroup);
  }
  auto g = f2xz();
  CHECK_THROWS_AS(g->mask({"H", {"q"}}), Error);
}

TEST_CASE("coset representatives") {
  auto g = f2xz();
  auto m = g->mask({"A", {"a"}});
  CHECK(g->format(g->coset_rep(m, g->parse_word("b*a^3*z"))) == "b*z");
  CHECK(g->in_subgroup(m, g->parse_word("a^-4")));
  CHECK_FALSE(g->in_subgroup(m, g->parse_word("a*z")));
  auto z3 = make_group(GroupSpec::free_abelian(3));
  auto h = z3->mask({"H", {"x", "y"}});
  CHECK(z3->format(z3->coset_rep(h, z3->parse_word("x^2*y*z^-1"))) == "z^-1");
  auto fp = make_group(GroupSpec::free_product({GroupSpec::free_abelian(2, {"x", "y"}), GroupSpec::free(1, {"t"})}));
  auto k = fp->mask({"K", {"x"}});
  CHECK(fp->format(fp->coset_rep(k, fp->parse_word("t*x^2*y*x"))) == "t*y");
  CHECK(fp->format(fp->coset_rep(k, fp->parse_word("y*t*x^3"))) == "y*t");
}

TEST_CASE("cayley ball") {
  SUBCASE("rank one free group, radius 2, is a path") {
    auto g = make_group(GroupSpec::free(1));
    auto sp = cayley_ball(g, gens(*g, {"a"}), 2);
    std::set<std::string> labels;
    for (VertexId v = 0; v < sp.graph().vertex_count(); ++v) labels.insert(sp.graph().label(v));
    CHECK(labels == std::set<std::string>{"a^-2", "a^-1", "1", "a", "a^2"});
    CHECK(sp.graph().edge_count() == 4);
    for (VertexId v = 0; v < sp.graph().vertex_count(); ++v) CHECK(sp.graph().neighbors(v).size() <= 2);
  }
  SUBCASE("F2 radius 1 is a star") {
    auto g = make_group(GroupSpec::free(2));
    auto sp = cayley_ball(g, gens(*g, {"a", "b"}), 1);
    CHECK(sp.graph().vertex_count() == 5);
    CHECK(sp.graph().edge_count() == 4);
    CHECK(sp.graph().neighbors(sp.identity_vertex()).size() == 4);
  }
  SUBCASE("radius zero") {
    auto g = make_group(GroupSpec::free(2));
    auto sp = cayley_ball(g, gens(*g, {"a", "b"}), 0);
    CHECK(sp.graph().vertex_count() == 1);
    CHECK(sp.graph().label(0) == "1");
  }
  SUBCASE("F2 ball size matches brute-force word enumeration") {
    auto g = make_group(GroupSpec::free(2));
    for (int r = 0; r <= 5; ++r) {
      std::set<std::string> words{""};
      std::function<void(std::string, int)> go = [&](std::string w, int left) {
        words.insert(reduce(w));
        if (left == 0) return;
        for (char c : std::string("aAbB")) go(w + c, left - 1);
      };
      go("", r);
      auto sp = cayley_ball(g, gens(*g, {"a", "b"}), r);
      CHECK(sp.graph().vertex_count() == words.size());
    }
  }
  SUBCASE("cyclic group of order 4 gives a 4-cycle") {
    auto g = make_group(GroupSpec::cyclic(4));
    auto sp = cayley_ball(g, gens(*g, {"c"}), 2);
    CHECK(sp.graph().vertex_count() == 4);
    CHECK(sp.graph().edge_count() == 4);
    auto c2 = make_group(GroupSpec::cyclic(2));
    auto sp2 = cayley_ball(c2, gens(*c2, {"c"}), 3);
    CHECK(sp2.graph().edge_count() == 1);
  }
}

TEST_CASE("coned cayley ball") {
  auto g = f2xz();
  ConedCayleySpec spec;
  spec.generators = gens(*g, {"a", "b", "z"});
  spec.radius = 6;
  SUBCASE("no peripherals gives the Cayley ball") {
    auto plain = cayley_ball(g, spec.generators, 3);
    spec.radius = 3;
    auto coned = coned_cayley_ball(g, spec);
    CHECK(coned.graph().vertex_count() == plain.graph().vertex_count());
    CHECK(coned.graph().edge_count() == plain.graph().edge_count());
    CHECK(coned.cone_vertices.empty());
  }
  SUBCASE("cone shortcut along <a>") {
    spec.peripherals = {{"A", {"a"}}};
    auto sp = coned_cayley_ball(g, spec);
    auto one = *sp.find_element(g->identity());
    auto a5 = *sp.find_element(g->parse_word("a^5"));
    auto apex = *sp.find({PointKind::Apex, 0, g->identity()});
    CHECK(sp.graph().edge_between(apex, one).has_value());
    CHECK(sp.graph().edge_between(apex, a5).has_value());
    auto d = oracle::sssp(sp.graph(), one);
    CHECK(*d[a5] == 1);
    CHECK(sp.metric->distance(one, a5) == *d[a5]);
  }
  SUBCASE("Z^3 with two cones") {
    auto z3 = make_group(GroupSpec::free_abelian(3));
    ConedCayleySpec s3;
    s3.generators = gens(*z3, {"x", "y", "z"});
    s3.peripherals = {{"H", {"x", "y"}}, {"K", {"x"}}};
    s3.radius = 3;
    auto sp = coned_cayley_ball(z3, s3);
    auto apex = *sp.find({PointKind::Apex, 0, z3->identity()});
    std::size_t expected = 0;
    for (int i = -3; i <= 3; ++i)
      for (int j = -3; j <= 3; ++j)
        if (std::abs(i) + std::abs(j) <= 3) ++expected;
    CHECK(sp.graph().neighbors(apex).size() == expected);
    for (const auto& inc : sp.graph().neighbors(apex)) {
      const auto& lab = sp.labels[inc.neighbor];
      CHECK(lab.kind == PointKind::Element);
      CHECK(lab.elem[2] == 0);
    }
  }
  SUBCASE("coned distances never exceed Cayley distances") {
    spec.radius = 4;
    auto plain = coned_cayley_ball(g, spec);
    spec.peripherals = {{"A", {"a"}}};
    auto coned = coned_cayley_ball(g, spec);
    for (VertexId u = 0; u < 20; ++u)
      for (VertexId v = 0; v < plain.labels.size(); ++v) {
        auto cu = *coned.find(plain.labels[u]);
        auto cv = *coned.find(plain.labels[v]);
        CHECK(coned.metric->distance(cu, cv) <= plain.metric->distance(u, v));
      }
  }
}

TEST_CASE("action is by isometries on the core") {
  auto g = f2xz();
  ConedCayleySpec spec;
  spec.generators = gens(*g, {"a", "b", "z"});
  spec.peripherals = {{"A", {"a"}}};
  spec.radius = 5;
  auto sp = coned_cayley_ball(g, spec);
  auto table = make_ball_action(sp, generator_table(*g, spec.generators));
  CHECK(table.elements.size() == 7);
  auto core = sp.element_vertices(2);
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    for (VertexId u : core)
      for (VertexId v : core) {
        VertexId gu = table.table[i][u], gv = table.table[i][v];
        REQUIRE(gu != kNoVertex);
        REQUIRE(gv != kNoVertex);
        CHECK(sp.metric->distance(gu, gv) == sp.metric->distance(u, v));
      }
    // cone vertices go to cone vertices
    for (VertexId c : sp.cone_vertices)
      if (table.table[i][c] != kNoVertex) CHECK(sp.is_cone(table.table[i][c]));
  }
  // composition where defined
  auto ab = g->multiply(table.elements[1], table.elements[3]);
  for (VertexId v : core) {
    auto lhs = sp.act(ab, v);
    auto rhs = sp.act(table.elements[1], table.table[3][v]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relative diameter") {
  auto g = f2xz();
  ConedCayleySpec spec;
  spec.generators = gens(*g, {"a", "b", "z"});
  spec.peripherals = {{"A", {"a"}}};
  spec.radius = 6;
  auto sp = coned_cayley_ball(g, spec);
  CHECK(relative_diameter(sp, {g->parse_word("b*z")}).value == 0);
  auto oracle_diam = [&](const std::vector<Element>& els) {
    Rational best(0);
    for (const auto& x : els) {
      auto d = oracle::sssp(sp.graph(), *sp.find_element(x));
      for (const auto& y : els) best = max(best, *d[*sp.find_element(y)]);
    }
    return best;
  };
  std::vector<Element> powers_a, powers_z;
  for (int k = -5; k <= 5; ++k) powers_a.push_back(g->power(g->parse_word("a"), k));
  for (int k = -3; k <= 3; ++k) powers_z.push_back(g->power(g->parse_word("z"), k));
  // every power of a sits on the cone of <a>, and distinct vertices are at
  // least one edge apart
  auto da = relative_diameter(sp, powers_a);
  CHECK(da.value == oracle_diam(powers_a));
  CHECK(da.value == 1);
  auto dz = relative_diameter(sp, powers_z);
  CHECK(dz.value == oracle_diam(powers_z));
  CHECK(dz.value == 6);
  CHECK_THROWS_AS(relative_diameter(sp, {g->parse_word("a^7")}), Error);
}

TEST_CASE("relative properness probe") {
  auto g = f2xz();
  ConedCayleySpec spec;
  spec.generators = gens(*g, {"a", "b", "z"});
  spec.peripherals = {{"A", {"a"}}};
  spec.radius = 6;
  auto sp = coned_cayley_ball(g, spec);
  SpaceLabel base{PointKind::Element, 0, g->identity()};
  SUBCASE("r = 0 returns only the identity") {
    auto rep = relative_properness_probe(sp, sp, base, 0);
    CHECK(rep.returning == 1);
    CHECK(rep.diameter.value == 0);
  }
  SUBCASE("r = 1") {
    auto rep = relative_properness_probe(sp, sp, base, 1);
    for (const char* w : {"1", "a", "a^-1", "b", "b^-1", "z", "z^-1"}) {
      auto v = *sp.find_element(g->parse_word(w));
      CHECK(sp.metric->distance(sp.identity_vertex(), v) <= 1);
    }
    CHECK(rep.returning >= 7);
    CHECK(rep.diameter.value <= 2);
  }
  SUBCASE("monotone in r") {
    Rational prev(0);
    for (int r = 0; r <= 3; ++r) {
      auto rep = relative_properness_probe(sp, sp, base, r);
      CHECK(rep.diameter.value >= prev);
      prev = rep.diameter.value;
    }
  }
  SUBCASE("radius beyond the target core") {
    CHECK_THROWS_AS(relative_properness_probe(sp, sp, base, 4), Error);
  }
}

TEST_CASE("Z^3 with only H peripheral grows") {
  auto z3 = make_group(GroupSpec::free_abelian(3));
  ConedCayleySpec target_spec;
  target_spec.generators = gens(*z3, {"x", "y", "z"});
  target_spec.peripherals = {{"H", {"x", "y"}}, {"K", {"x"}}};
  target_spec.radius = 8;
  auto target = coned_cayley_ball(z3, target_spec);
  ConedCayleySpec measure_spec = target_spec;
  measure_spec.peripherals = {{"H", {"x", "y"}}};
  auto measure = coned_cayley_ball(z3, measure_spec);
  SpaceLabel base{PointKind::Element, 0, z3->identity()};
  Rational prev(-1);
  for (int r = 1; r <= 4; ++r) {
    auto rep = relative_properness_probe(measure, target, base, r);
    CHECK(rep.diameter.value > prev);
    prev = rep.diameter.value;
  }
}

TEST_CASE("schwarz-milnor probe") {
  auto g = make_group(GroupSpec::free(2));
  auto sp = cayley_ball(g, gens(*g, {"a", "b"}), 3);
  auto core = sp.element_vertices(1);
  std::vector<VertexId> all;
  for (VertexId v = 0; v < sp.labels.size(); ++v) all.push_back(v);
  SUBCASE("identity map") {
    auto rep = schwarz_milnor_probe(*sp.metric, core, *sp.metric, core, all);
    CHECK(rep.lambda == 1);
    CHECK(rep.k == 0);
    CHECK(rep.density == 0);
    CHECK_FALSE(rep.not_qi);
  }
  SUBCASE("collapsing map") {
    std::vector<VertexId> collapse(all.size(), 0);
    auto rep = schwarz_milnor_probe(*sp.metric, core, *sp.metric, {0}, collapse);
    CHECK(rep.density == 0);
    CHECK(rep.not_qi);
    CHECK(rep.collapsed_pairs > 0);
  }
  SUBCASE("undefined image") {
    std::vector<VertexId> partial(all.size(), kNoVertex);
    CHECK_THROWS_AS(schwarz_milnor_probe(*sp.metric, core, *sp.metric, core, partial), Error);
  }
}
