#include <algorithm>
#include <random>

#include "ccl/cert/report.hpp"
#include "ccl/cert/sufficiency.hpp"
#include "ccl/core/error.hpp"
#include "ccl/tos/combined.hpp"
#include "doctest.h"

using namespace ccl;

namespace {

std::shared_ptr<const DistanceOracle> cycle(int n) {
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n, Rational(1));
  return make_metric(std::move(b).build());
}

std::vector<VertexId> all_vertices(const MetricGraph& g) {
  std::vector<VertexId> v(g.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Independent model of a unit cycle: vertex i sits at position i on a circle
// of circumference n, and a combing line is an arc read off the vertex
// sequence (start, direction, length).
struct CycleOracle {
  int n;
  struct Arc {
    int start, dir, len;
  };
  std::vector<std::vector<Arc>> arcs;

  CycleOracle(int n_, const Combing& g) : n(n_), arcs(n_, std::vector<Arc>(n_)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto p = g.path(x, y);
        int len = static_cast<int>(p.vertices.size()) - 1;
        int dir = len == 0 ? 1 : ((static_cast<int>(p.vertices[1]) - x + n) % n == 1 ? 1 : -1);
        arcs[x][y] = {x, dir, len};
      }
  }
  Rational wrap(Rational p) const {
    Rational N(n);
    while (p.sign() < 0) p += N;
    while (!(p < N)) p -= N;
    return p;
  }
  Rational point(int x, int y, const Rational& t) const {
    const Arc& a = arcs[x][y];
    return wrap(Rational(a.start) + Rational(a.dir) * t * Rational(a.len));
  }
  Rational dist(const Rational& p, const Rational& q) const {
    Rational d = wrap(p - q);
    return min(d, Rational(n) - d);
  }
  Rational vdist(int x, int y) const { return dist(Rational(x), Rational(y)); }
  std::vector<Rational> bps(int x, int y) const {
    int L = arcs[x][y].len;
    if (L == 0) return {Rational(0), Rational(1)};
    std::vector<Rational> out;
    for (int i = 0; i <= L; ++i) out.emplace_back(i, L);
    return out;
  }
  static std::vector<Rational> grid(int den, std::vector<Rational> extra) {
    for (int i = 0; i <= den; ++i) extra.emplace_back(i, den);
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    return extra;
  }
  static void ratios(std::vector<Rational>& out, const std::vector<Rational>& b, const Rational& a) {
    if (a.is_zero()) return;
    for (const auto& x : b)
      if (x <= a) out.push_back(x / a);
  }
  static Rational pos(const Rational& x) { return x.sign() < 0 ? Rational(0) : x; }

  Rational gcc(const Rational& E) const {
    Rational best(0);
    for (int x1 = 0; x1 < n; ++x1)
      for (int y1 = 0; y1 < n; ++y1)
        for (int x2 = 0; x2 < n; ++x2)
          for (int y2 = 0; y2 < n; ++y2) {
            auto b1 = bps(x1, y1), b2 = bps(x2, y2);
            for (const auto& a : grid(4, b1))
              for (const auto& b : grid(4, b2)) {
                std::vector<Rational> extra;
                ratios(extra, b1, a);
                ratios(extra, b2, b);
                Rational dy = dist(point(x1, y1, a), point(x2, y2, b));
                for (const auto& c : grid(4, extra)) {
                  Rational l = dist(point(x1, y1, c * a), point(x2, y2, c * b));
                  best = max(best, l - E * ((Rational(1) - c) * vdist(x1, x2) + c * dy));
                }
              }
          }
    return best;
  }
  Rational qg_k(const Rational& lambda) const {
    Rational best(0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (const auto& t : grid(8, bps(x, y)))
          for (const auto& s : grid(8, bps(x, y))) {
            Rational l = dist(point(x, y, t), point(x, y, s));
            Rational delta = (t - s).abs() * vdist(x, y);
            best = max(best, max(l - lambda * delta, delta / lambda - l));
          }
    return best;
  }
  Rational consistency() const {
    Rational best(0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto b = bps(x, y);
        for (const auto& a : b) {
          Rational zp = point(x, y, a);
          int z = static_cast<int>(zp.num());
          std::vector<Rational> extra = bps(x, z);
          ratios(extra, b, a);
          for (const auto& c : grid(8, extra)) best = max(best, dist(point(x, z, c), point(x, y, c * a)));
        }
      }
    return best;
  }
  Rational convexity(const Rational& E, bool forward) const {
    Rational best(0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r) {
          int x1 = p, y1 = forward ? q : r, x2 = forward ? p : q, y2 = r;
          auto extra = bps(x1, y1);
          auto b2 = bps(x2, y2);
          extra.insert(extra.end(), b2.begin(), b2.end());
          for (const auto& c : grid(8, extra)) {
            Rational l = dist(point(x1, y1, c), point(x2, y2, c));
            Rational m = forward ? c * vdist(q, r) : (Rational(1) - c) * vdist(p, q);
            best = max(best, l - E * m);
          }
        }
    return best;
  }
  Rational bounded_c2(const Rational& c1) const {
    Rational best(0);
    for (int x1 = 0; x1 < n; ++x1)
      for (int y1 = 0; y1 < n; ++y1)
        for (int x2 = 0; x2 < n; ++x2)
          for (int y2 = 0; y2 < n; ++y2) {
            auto extra = bps(x1, y1);
            auto b2 = bps(x2, y2);
            extra.insert(extra.end(), b2.begin(), b2.end());
            Rational m = max(vdist(x1, x2), vdist(y1, y2));
            for (const auto& t : grid(8, extra))
              best = max(best, dist(point(x1, y1, t), point(x2, y2, t)) - c1 * m);
          }
    return best;
  }
  // max of |t d1 - s d2| - theta(d(x1,x2) + d(g1(t), g2(s)))
  template <class F>
  Rational param_excess(F theta) const {
    bool first = true;
    Rational best;
    for (int x1 = 0; x1 < n; ++x1)
      for (int y1 = 0; y1 < n; ++y1)
        for (int x2 = 0; x2 < n; ++x2)
          for (int y2 = 0; y2 < n; ++y2)
            for (const auto& t : grid(8, bps(x1, y1)))
              for (const auto& s : grid(8, bps(x2, y2))) {
                Rational gap = (t * vdist(x1, y1) - s * vdist(x2, y2)).abs();
                Rational v = gap - theta(vdist(x1, x2) + dist(point(x1, y1, t), point(x2, y2, s)));
                if (first || v > best) best = v;
                first = false;
              }
    return best;
  }
};

Rational swept(const CertReport& r, const Rational& e) {
  for (const auto& [m, c] : r.sweep)
    if (m == e) return c;
  FAIL("multiplier not swept");
  return Rational(0);
}

// random tree on n vertices with edge lengths in {1/2, 1, 3/2}
std::shared_ptr<const DistanceOracle> random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("t" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    auto parent = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(i));
    b.add_edge(parent, i, Rational(static_cast<std::int64_t>(1 + rng() % 3), 2));
  }
  return make_metric(std::move(b).build());
}

// 10-cycle whose pair (v0, v4) is combed along the long side: the detour
// fixture, a distance-4 pair given a path of length 6
std::shared_ptr<OverrideCombing> detour_combing() {
  auto m = cycle(10);
  auto base = std::make_shared<CanonicalCombing>(m);
  auto g = std::make_shared<OverrideCombing>(base);
  g->set(0, 4, path_through(m->graph(), {0, 9, 8, 7, 6, 5, 4}));
  return g;
}

}  // namespace

TEST_CASE("trees certify at the zero profile") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto m = random_tree(9, seed);
    CanonicalCombing g(m);
    auto core = all_vertices(m->graph());
    SamplePlan plan;
    CHECK(check_geodesic(g, core, plan).certified);
    CHECK(check_quasigeodesic(g, core, Rational(1), Rational(0), plan).certified);
    auto gcc = check_gcc(g, core, Rational(1), Rational(0), plan);
    CHECK(gcc.certified);
    CHECK(gcc.exhaustive);
    CHECK(check_consistency(g, core, Rational(0), plan).certified);
    CHECK(check_forward_backward(g, core, Rational(1), Rational(0), plan).certified);
    CHECK(check_bounded(g, core, Rational(1), Rational(0), Rational(1), Rational(0), plan).certified);
  }
}

TEST_CASE("6-cycle minimal constants agree with the circle model") {
  auto m = cycle(6);
  CanonicalCombing g(m);
  CycleOracle o(6, g);
  auto core = all_vertices(m->graph());
  SamplePlan plan;
  auto gcc = check_gcc(g, core, Rational(1), Rational(0), plan);
  for (const auto& e : plan.sweep) CHECK(swept(gcc, e) == o.gcc(e));
  CHECK(o.gcc(Rational(1)) > Rational(0));
  CHECK_FALSE(gcc.certified);

  auto fwd = check_forward(g, core, Rational(1), Rational(0), plan);
  auto bwd = check_backward(g, core, Rational(1), Rational(0), plan);
  for (const auto& e : plan.sweep) {
    CHECK(swept(fwd, e) == o.convexity(e, true));
    CHECK(swept(bwd, e) == o.convexity(e, false));
  }
  auto qg = check_quasigeodesic(g, core, Rational(1), Rational(0), plan);
  CHECK(qg.certified);
  for (const auto& e : plan.sweep) CHECK(swept(qg, e) == o.qg_k(e));
  CHECK(o.consistency() == Rational(0));
  CHECK(check_consistency(g, core, Rational(0), plan).certified);
  auto bounded = check_bounded(g, core, Rational(1), Rational(0), Rational(1), Rational(0), plan);
  for (const auto& e : plan.sweep) CHECK(swept(bounded, e) == o.bounded_c2(e));
}

TEST_CASE("detour fixture: quasi-geodesic constant and parameter regularity") {
  auto g = detour_combing();
  CycleOracle o(10, *g);
  auto core = all_vertices(g->graph());
  SamplePlan plan;
  CHECK_FALSE(check_geodesic(*g, core, plan).certified);
  CHECK_THROWS_AS(check_gcc(*g, core, Rational(1), Rational(10), plan), Error);
  auto qg = check_quasigeodesic(*g, core, Rational(1), Rational(0), plan);
  Rational k = o.qg_k(Rational(1));
  CHECK(swept(qg, Rational(1)) == k);
  CHECK(k == Rational(5, 3));  // the circle model's own value, not an input
  CHECK(check_quasigeodesic(*g, core, Rational(1), k, plan).certified);
  CHECK_FALSE(check_quasigeodesic(*g, core, Rational(1), k - Rational(1, 24), plan).certified);
  CHECK_THROWS_AS(check_bounded(*g, core, Rational(1), Rational(1), Rational(1), Rational(0), plan), Error);

  Theta theta = Theta::affine(Rational(1), Rational(2) * k);
  auto cc = check_cc_full(*g, core, Rational(1), k, Rational(5), Rational(100), theta, plan);
  Rational excess = o.param_excess([&](const Rational& x) { return x + Rational(2) * k; });
  const CertReport* param = cc.part("cc-param");
  REQUIRE(param);
  CHECK(param->certified == !(excess > Rational(0)));
  CHECK(cc.part("cc-param-identity") == nullptr);
}

TEST_CASE("theta variants and witness replay") {
  auto m = cycle(6);
  CanonicalCombing g(m);
  auto core = all_vertices(m->graph());
  SamplePlan plan;
  auto ok = check_cc_full(g, core, Rational(1), Rational(0), Rational(3), Rational(3), Theta::identity(), plan);
  CHECK(ok.part("cc-param")->certified);
  REQUIRE(ok.part("cc-param-identity"));
  CHECK(ok.part("cc-param-identity")->certified);

  auto zero = check_cc_full(g, core, Rational(1), Rational(0), Rational(3), Rational(3),
                            Theta::affine(Rational(0), Rational(0)), plan);
  CHECK_FALSE(zero.certified);
  REQUIRE(zero.part("cc-param")->witness);
  std::string why;
  CHECK_MESSAGE(replay_witnesses(g, zero, nullptr, &why), why);

  auto steps = Theta::step_table({{Rational(0), Rational(1)}, {Rational(2), Rational(3)}});
  CHECK(steps(Rational(-1)) == Rational(1));
  CHECK(steps(Rational(2)) == Rational(3));
  CHECK_THROWS_AS(Theta::step_table({{Rational(0), Rational(2)}, {Rational(1), Rational(1)}}), Error);

  auto bad = check_gcc(g, core, Rational(1), Rational(0), plan);
  REQUIRE(bad.witness);
  auto back = report_from_json(report_to_json(bad, g.graph()));
  CHECK(report_to_json(back, g.graph()) == report_to_json(bad, g.graph()));
  CHECK(replay_witnesses(g, back));
  // a tampered witness no longer replays
  back.witness->required += Rational(1);
  CHECK_FALSE(replay_witnesses(g, back));
}

TEST_CASE("monotone in the profile") {
  auto m = cycle(6);
  CanonicalCombing g(m);
  auto core = all_vertices(m->graph());
  SamplePlan plan;
  Rational c = swept(check_gcc(g, core, Rational(1), Rational(0), plan), Rational(1));
  CHECK(check_gcc(g, core, Rational(1), c, plan).certified);
  CHECK(check_gcc(g, core, Rational(2), c, plan).certified);
  CHECK(check_gcc(g, core, Rational(1), c + Rational(1), plan).certified);
  CHECK_FALSE(check_gcc(g, core, Rational(1), c - Rational(1, 8), plan).certified);
}

TEST_CASE("sampled and exhaustive verdicts agree on small graphs") {
  auto m = cycle(7);
  CanonicalCombing g(m);
  auto core = all_vertices(m->graph());
  SamplePlan full;
  SamplePlan sampled;
  sampled.exhaustive_core = 0;
  sampled.samples = 20000;
  sampled.seed = 17;
  Rational c = swept(check_forward(g, core, Rational(1), Rational(0), full), Rational(1));
  for (const Rational& C : {c, c - Rational(1, 8)}) {
    auto a = check_forward(g, core, Rational(1), C, full);
    auto b = check_forward(g, core, Rational(1), C, sampled);
    CHECK(a.exhaustive);
    CHECK_FALSE(b.exhaustive);
    CHECK(a.certified == b.certified);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  auto m = cycle(6);
  CanonicalCombing g(m);
  auto core = all_vertices(m->graph());
  SamplePlan one, four;
  one.jobs = 1;
  four.jobs = 4;
  CHECK(report_to_json(check_gcc(g, core, Rational(1), Rational(0), one), g.graph()) ==
        report_to_json(check_gcc(g, core, Rational(1), Rational(0), four), g.graph()));
  one.exhaustive_core = four.exhaustive_core = 0;
  one.samples = four.samples = 5000;
  CHECK(report_to_json(check_forward(g, core, Rational(1), Rational(0), one), g.graph()) ==
        report_to_json(check_forward(g, core, Rational(1), Rational(0), four), g.graph()));
}

TEST_CASE("hausdorff distance of subpaths on a line") {
  GraphBuilder b;
  for (int i = 0; i < 7; ++i) b.add_vertex();
  for (int i = 0; i < 6; ++i) b.add_edge(i, i + 1, Rational(1));
  auto m = make_metric(std::move(b).build());
  auto p = path_through(m->graph(), {0, 1, 2, 3, 4, 5, 6});
  std::span<const VertexId> v(p.vertices);
  std::span<const EdgeId> e(p.edges);
  // images [a,b] and [c,d] on a line are max(|a-c|, |b-d|) apart
  CHECK(hausdorff(*m, v.subspan(0, 4), e.subspan(0, 3), v.subspan(2, 3), e.subspan(2, 2)) == Rational(2));
  CHECK(hausdorff(*m, v.subspan(1, 3), e.subspan(1, 2), v.subspan(1, 3), e.subspan(1, 2)) == Rational(0));
  // a single vertex against a segment of length 3 from its end
  CHECK(hausdorff(*m, v.subspan(0, 1), e.subspan(0, 0), v.subspan(0, 4), e.subspan(0, 3)) == Rational(3));

  // on a 4-cycle the midpoint of edge (1,2) is 3/2 from both 0 and 3
  auto c4 = cycle(4);
  auto q = path_through(c4->graph(), {1, 2});
  auto r = path_through(c4->graph(), {3, 0});
  CHECK(hausdorff(*c4, q.vertices, q.edges, r.vertices, r.edges) == Rational(3, 2));
  auto s = path_through(c4->graph(), {0, 1, 2, 3});
  auto t = path_through(c4->graph(), {0});
  CHECK(hausdorff(*c4, s.vertices, s.edges, t.vertices, t.edges) == Rational(2));
}

TEST_CASE("thinness on two glued segments") {
  auto seg = [](int n, const std::string& name) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex(name + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1, Rational(1));
    return SpaceCopy{std::make_shared<const MetricGraph>(std::move(b).build()), name};
  };
  std::vector<SpaceCopy> copies{seg(5, "a"), seg(5, "b")};
  std::vector<GluePointSpec> glue{{"g", {{0, 2}, {1, 2}}}};
  auto tos = std::make_shared<const TreeOfSpaces>(glue_tree_of_spaces(copies, glue, Rational(1, 2)));
  auto family = canonical_family(tos, FamilyMode::Transported);
  CombinedCombing g(tos, family);
  auto core = all_vertices(g.graph());
  std::vector<std::vector<VertexId>> candidates;
  for (std::size_t k = 0; k < tos->k_count(); ++k) candidates.push_back(tos->vertex_space[tos->k_vertices[k]]);
  SamplePlan plan;
  for (auto dir : {ThinDirection::Forward, ThinDirection::Backward}) {
    auto r = check_thinness(g, candidates, core, Rational(0), Rational(0), Rational(1), dir, plan);
    CHECK_MESSAGE(r.certified, r.witness_text);
    CHECK(*r.constant("least_D") == Rational(0));
    CHECK(*r.constant("item2_max") <= Rational(0));
    CHECK(r.skipped > 0);
  }
  auto suff = cross_check_thin(g, candidates, core, Rational(0), Rational(0), Rational(1), plan);
  CHECK(suff.certified);
  CHECK(*suff.constant("C_budget") == Rational(0));

  // one candidate that is not convex, and a threshold no triple clears
  std::vector<std::vector<VertexId>> broken{{core.front(), core.back()}};
  CHECK_THROWS_AS(check_thinness(g, broken, core, Rational(0), Rational(0), Rational(1), ThinDirection::Forward, plan),
                  Error);
  CHECK_THROWS_AS(check_thinness(g, candidates, core, Rational(0), Rational(100), Rational(1),
                                 ThinDirection::Forward, plan),
                  Error);
}

TEST_CASE("sufficiency cross-checks on the 6-cycle and a tree") {
  auto m = cycle(6);
  CanonicalCombing g(m);
  auto core = all_vertices(m->graph());
  SamplePlan plan;
  auto a = cross_check_gccc(g, core, Rational(1), plan);
  CHECK(a.certified);
  CHECK(*a.constant("C_conclusion") <= *a.constant("C_budget"));
  auto b = cross_check_ccgccc(g, core, Rational(1), plan);
  CHECK(b.certified);
  CHECK(*b.constant("K") == Rational(0));

  auto t = random_tree(8, 5);
  CanonicalCombing tg(t);
  auto tc = all_vertices(t->graph());
  auto ta = cross_check_ccgccc(tg, tc, Rational(1), plan);
  CHECK(*ta.constant("C_premise") == Rational(0));
  CHECK(*ta.constant("C_conclusion") == Rational(0));
  auto rows = sweep_csv_rows("tree", ta);
  CHECK_FALSE(rows.empty());
  CHECK(rows.front().rfind("tree,", 0) == 0);
}
