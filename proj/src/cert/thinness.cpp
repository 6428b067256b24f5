#include "ccl/cert/thinness.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <unordered_set>

#include "ccl/core/error.hpp"

namespace ccl {

namespace {

struct Span {
  std::size_t first = 0, last = 0;
  bool found = false;
};

Span locate(const GeodesicPath& p, const std::vector<char>& member) {
  Span s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!member[p.vertices[i]]) continue;
    if (!s.found) s.first = i;
    s.found = true;
    s.last = i;
  }
  return s;
}

bool restriction_matches(const GeodesicPath& p, const Span& s, const GeodesicPath& sub) {
  if (sub.vertices.size() != s.last - s.first + 1) return false;
  if (!std::equal(sub.vertices.begin(), sub.vertices.end(), p.vertices.begin() + static_cast<std::ptrdiff_t>(s.first))) {
    return false;
  }
  return std::equal(sub.edges.begin(), sub.edges.end(), p.edges.begin() + static_cast<std::ptrdiff_t>(s.first));
}

std::int64_t set_distance(const DistanceOracle& metric, VertexId x, std::span<const VertexId> set) {
  const auto& row = metric.row(x);
  std::int64_t best = DistanceOracle::kUnreachable;
  for (VertexId y : set) best = std::min(best, row[y]);
  return best;
}

// twice the directed Hausdorff distance from A to B, in scaled units
std::int64_t directed_twice(const DistanceOracle& metric, std::span<const VertexId> va, std::span<const EdgeId> ea,
                            std::span<const VertexId> vb, std::span<const EdgeId> eb) {
  std::unordered_set<EdgeId> shared(eb.begin(), eb.end());
  std::int64_t worst = 0;
  for (VertexId x : va) worst = std::max(worst, 2 * set_distance(metric, x, vb));
  const MetricGraph& g = metric.graph();
  for (EdgeId e : ea) {
    if (shared.count(e)) continue;
    std::int64_t len = metric.scaled_length(e);
    std::int64_t A = set_distance(metric, g.edge(e).u, vb);
    std::int64_t B = set_distance(metric, g.edge(e).v, vb);
    // sup over the edge of min(s + A, len - s + B)
    std::int64_t twice;
    if (A + len <= B) {
      twice = 2 * (A + len);
    } else if (B + len <= A) {
      twice = 2 * (B + len);
    } else {
      twice = len + A + B;
    }
    worst = std::max(worst, twice);
  }
  return worst;
}

}  // namespace

Rational hausdorff(const DistanceOracle& metric, std::span<const VertexId> va, std::span<const EdgeId> ea,
                   std::span<const VertexId> vb, std::span<const EdgeId> eb) {
  std::int64_t t = std::max(directed_twice(metric, va, ea, vb, eb), directed_twice(metric, vb, eb, va, ea));
  return Rational(t, 2 * metric.scale());
}

ThinMeasure thin_measure(const PathCache& cache, const std::vector<char>& member, ThinDirection dir,
                         VertexId t0, VertexId t1, VertexId t2) {
  const DistanceOracle& d = cache.combing().metric();
  const bool fwd = dir == ThinDirection::Forward;
  const GeodesicPath& g1 = fwd ? cache.get(t0, t1) : cache.get(t0, t2);
  const GeodesicPath& g2 = fwd ? cache.get(t0, t2) : cache.get(t1, t2);
  ThinMeasure m;
  Span s1 = locate(g1, member), s2 = locate(g2, member);
  if (!s1.found || !s2.found) return m;
  m.meets = true;
  m.p1 = g1.vertices[s1.first];
  m.a = g1.vertices[s1.last];
  m.p2 = g2.vertices[s2.first];
  m.b = g2.vertices[s2.last];
  m.c0 = vertex_params(g1, s1.first).first;
  m.c1 = vertex_params(g1, s1.last).second;
  m.c0p = vertex_params(g2, s2.first).first;
  m.c1p = vertex_params(g2, s2.last).second;
  m.restriction = restriction_matches(g1, s1, cache.get(m.p1, m.a)) && restriction_matches(g2, s2, cache.get(m.p2, m.b));

  std::span<const VertexId> v1(g1.vertices), v2(g2.vertices);
  std::span<const EdgeId> e1(g1.edges), e2(g2.edges);
  if (fwd) {
    Rational haus = hausdorff(d, v1.subspan(0, s1.first + 1), e1.subspan(0, s1.first), v2.subspan(0, s2.first + 1),
                              e2.subspan(0, s2.first));
    m.fellow = max(d.distance(g1.source(), g2.source()), max(d.distance(m.p1, m.p2), haus));
    Rational ends = d.distance(t1, t2);
    m.item2 = d.distance(m.a, m.b) - max(m.c1, m.c1p) * ends;
    m.item4 = d.distance(t1, m.a) + d.distance(m.a, m.b) + d.distance(m.b, t2) - ends;
  } else {
    Rational haus = hausdorff(d, v1.subspan(s1.last), e1.subspan(s1.last), v2.subspan(s2.last), e2.subspan(s2.last));
    m.fellow = max(d.distance(m.a, m.b), max(d.distance(g1.target(), g2.target()), haus));
    Rational ends = d.distance(t0, t1);
    m.item2 = d.distance(m.p1, m.p2) - max(Rational(1) - m.c0, Rational(1) - m.c0p) * ends;
    m.item4 = d.distance(t0, m.p1) + d.distance(m.p1, m.p2) + d.distance(m.p2, t1) - ends;
  }
  return m;
}

std::vector<std::vector<char>> membership(std::size_t n, const std::vector<std::vector<VertexId>>& candidates) {
  std::vector<std::vector<char>> out;
  for (const auto& c : candidates) {
    std::vector<char> m(n, 0);
    for (VertexId v : c) m.at(v) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

Display thin_display(const PathCache& cache, const std::vector<std::vector<char>>& members, ThinDirection dir,
                     const Rational& D) {
  Display disp{dir == ThinDirection::Forward ? "thin-forward" : "thin-backward", 3, 6, {}};
  disp.prepare = [&cache, &members, dir, D](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    const DistanceOracle& d = cache.combing().metric();
    if (!d.connected(t[0], t[1]) || !d.connected(t[0], t[2])) return std::nullopt;
    Rational lo = dir == ThinDirection::Forward ? min(d.distance(t[0], t[1]), d.distance(t[0], t[2]))
                                                : min(d.distance(t[0], t[2]), d.distance(t[1], t[2]));
    if (!(lo > Rational(2) * D)) return std::nullopt;
    std::array<VertexId, 3> tri{t[0], t[1], t[2]};
    DisplayCase c;
    c.eval = [&cache, &members, dir, tri](std::span<const Rational>, std::vector<Sample>& out) {
      std::optional<ThinMeasure> best;
      Rational best_req, relaxed;
      bool any = false;
      for (const auto& mem : members) {
        ThinMeasure m = thin_measure(cache, mem, dir, tri[0], tri[1], tri[2]);
        if (!m.meets || !m.restriction) continue;
        Rational req = max(m.fellow, max(m.item2 / Rational(4), m.item4 / Rational(4)));
        Rational rel = max(m.fellow / Rational(2), max(m.item2 / Rational(8), m.item4 / Rational(8)));
        if (!best || req < best_req) {
          best = m;
          best_req = req;
        }
        relaxed = any ? min(relaxed, rel) : rel;
        any = true;
      }
      if (!best) {
        out.push_back({Rational(1), Rational(0), Rational(0), 5});
        return;
      }
      out.push_back({best_req, Rational(0), Rational(0), 0});
      out.push_back({relaxed, Rational(0), Rational(0), 1});
      out.push_back({best->fellow, Rational(0), Rational(0), 2});
      out.push_back({best->item2, Rational(0), Rational(0), 3});
      out.push_back({best->item4, Rational(0), Rational(0), 4});
      out.push_back({Rational(0), Rational(0), Rational(0), 5});
    };
    return c;
  };
  return disp;
}

namespace {

Display convex_display(const PathCache& cache, const std::vector<char>& member, std::string name) {
  Display d{std::move(name), 2, 1, {}};
  d.prepare = [&cache, &member](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!cache.combing().metric().connected(t[0], t[1])) return std::nullopt;
    const GeodesicPath& p = cache.get(t[0], t[1]);
    DisplayCase c;
    c.eval = [&p, &member](std::span<const Rational>, std::vector<Sample>& out) {
      bool inside = std::all_of(p.vertices.begin(), p.vertices.end(), [&](VertexId v) { return member[v] != 0; });
      out.push_back({inside ? Rational(0) : Rational(1), Rational(0), Rational(0)});
    };
    return c;
  };
  return d;
}

}  // namespace

CertReport check_thinness(const Combing& g, const std::vector<std::vector<VertexId>>& candidates,
                          const std::vector<VertexId>& core, const Rational& C, const Rational& D,
                          const Rational& E, ThinDirection dir, const SamplePlan& plan, bool check_subspace_gcc) {
  if (E < Rational(1) || C.sign() < 0 || D.sign() < 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "thinness needs E >= 1 and C, D >= 0");
  }
  const std::size_t n = g.graph().vertex_count();
  auto members = membership(n, candidates);
  PathCache cache(g);
  std::vector<char> in_core(n, 0);
  for (VertexId v : core) in_core[v] = 1;

  CertReport r;
  r.property = dir == ThinDirection::Forward ? "thin-forward" : "thin-backward";
  r.core_radius = plan.core_radius;

  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<VertexId> sub;
    for (VertexId v = 0; v < n; ++v) {
      if (members[i][v] && in_core[v]) sub.push_back(v);
    }
    Display conv = convex_display(cache, members[i], "convex");
    Measurement cm = measure(conv, sub, {Rational(1)}, plan);
    if (cm.required(Rational(1)).sign() > 0) {
      const Witness& w = cm.at(Rational(1)).witness;
      throw Error(ErrorCode::SubspaceNotConvex, "candidate " + std::to_string(i) + ": the combing line from " +
                                                    g.graph().label(w.tuple[0]) + " to " +
                                                    g.graph().label(w.tuple[1]) + " leaves it");
    }
    if (check_subspace_gcc) {
      CertReport part = check_gcc(g, sub, E, C, plan);
      part.property = "subspace-gcc[" + std::to_string(i) + "]";
      r.parts.push_back(std::move(part));
    }
  }

  Display disp = thin_display(cache, members, dir, D);
  Measurement m = measure(disp, core, {Rational(1)}, plan);
  if (m.evaluations == 0) {
    throw Error(ErrorCode::TriplesTooShort, "no core triple has both distances above 2D = " + (Rational(2) * D).str());
  }
  r.tuples = m.tuples;
  r.evaluations = m.evaluations;
  r.skipped = m.skipped;
  r.exhaustive = m.exhaustive;
  r.seed = m.exhaustive ? 0 : m.seed;

  const Rational one(1);
  Rational least = m.required(one, 0), relaxed = m.required(one, 1);
  bool unmatched = m.required(one, 5).sign() > 0;
  r.profile = {{"C", C},
               {"D", D},
               {"E", E},
               {"least_D", least},
               {"least_D_relaxed", relaxed},
               {"fellow_max", m.required(one, 2)},
               {"item2_max", m.required(one, 3)},
               {"item4_max", m.required(one, 4)}};
  bool published = !unmatched && !(least > D);
  bool loose = !unmatched && !(relaxed > D);
  r.certified = published;
  for (const auto& p : r.parts) r.certified = r.certified && p.certified;
  r.notes.push_back(std::string("budgets D and 4D: ") + (published ? "met" : "not met"));
  r.notes.push_back(std::string("budgets 2D and 8D: ") + (loose ? "met" : "not met"));
  r.notes.push_back("triples skipped (distance <= 2D or disconnected): " + std::to_string(m.skipped));
  if (!published) {
    Witness w = m.at(one, unmatched ? 5 : 0).witness;
    w.bound = unmatched ? Rational(0) : D;
    r.witness = w;
    r.witness_text = describe_witness(g.graph(), w);
    if (unmatched) r.notes.push_back("some triple meets no candidate subspace with the restriction identity");
  }
  return r;
}

}  // namespace ccl
