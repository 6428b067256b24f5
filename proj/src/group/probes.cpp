#include "ccl/group/probes.hpp"

#include <algorithm>
#include <queue>

#include "ccl/core/error.hpp"
#include "ccl/core/parallel.hpp"

namespace ccl {

std::vector<std::int64_t> multi_source_scaled(const DistanceOracle& metric, const std::vector<VertexId>& sources) {
  const MetricGraph& g = metric.graph();
  std::vector<std::int64_t> dist(g.vertex_count(), DistanceOracle::kUnreachable);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (VertexId s : sources) {
    dist[s] = 0;
    heap.emplace(0, s);
  }
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (const auto& inc : g.neighbors(x)) {
      std::int64_t nd = d + metric.scaled_length(inc.edge);
      if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        heap.emplace(nd, inc.neighbor);
      }
    }
  }
  return dist;
}

RelativeDiameter relative_diameter(const CayleySpace& coned, const std::vector<Element>& elements, unsigned jobs) {
  std::vector<VertexId> vs;
  for (const auto& g : elements) {
    auto v = coned.find_element(g);
    if (!v) throw Error(ErrorCode::ElementOutsideBall, coned.group->format(g));
    vs.push_back(*v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  const auto& metric = *coned.metric;
  std::vector<std::int64_t> weights(metric.graph().edge_count());
  for (EdgeId e = 0; e < weights.size(); ++e) weights[e] = metric.scaled_length(e);

  struct Best {
    std::int64_t d = -1;
    VertexId a = kNoVertex, b = kNoVertex;
    bool unreachable = false;
  };
  const std::size_t chunk = 16;
  std::size_t chunks = (vs.size() + chunk - 1) / chunk;
  std::vector<Best> partial(chunks);
  parallel_chunks(chunks, jobs, [&](std::size_t c) {
    Best best;
    for (std::size_t i = c * chunk; i < std::min(vs.size(), (c + 1) * chunk); ++i) {
      auto row = dijkstra_scaled(metric.graph(), weights, vs[i]);
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        std::int64_t d = row[vs[j]];
        if (d == DistanceOracle::kUnreachable) {
          best.unreachable = true;
          continue;
        }
        if (d > best.d) best = {d, vs[i], vs[j], best.unreachable};
      }
    }
    partial[c] = best;
  });
  RelativeDiameter out;
  out.value = Rational(0);
  std::int64_t best = 0;
  for (const auto& p : partial) {
    if (p.unreachable) out.reachable = false;
    if (p.d > best) {
      best = p.d;
      out.witness_a = p.a;
      out.witness_b = p.b;
    }
  }
  out.value = Rational(best, metric.scale());
  if (out.witness_a == kNoVertex && !vs.empty()) out.witness_a = out.witness_b = vs.front();
  return out;
}

ProperProbeReport relative_properness_probe(const CayleySpace& measure, const CayleySpace& target,
                                            const SpaceLabel& basepoint, int r, unsigned jobs) {
  if (r < 0) throw Error(ErrorCode::ParameterOutOfRange, "negative probe radius");
  auto x = target.find(basepoint);
  if (!x) throw Error(ErrorCode::BallTooSmall, "basepoint is not in the target truncation");
  // the target ball must contain every point within r of the basepoint that
  // an element of word length <= radius/2 can reach
  if (2 * r > target.radius) throw Error(ErrorCode::BallTooSmall, "probe radius exceeds the target's safe core");
  const auto& row = target.metric->row(*x);
  Rational bound(r);
  ProperProbeReport rep;
  rep.r = r;
  std::vector<Element> returning;
  for (VertexId v = 0; v < measure.labels.size(); ++v) {
    if (measure.labels[v].kind != PointKind::Element) continue;
    const Element& g = measure.labels[v].elem;
    auto gx = target.find(target.translate(g, basepoint));
    if (!gx) continue;
    std::int64_t d = row[*gx];
    if (d == DistanceOracle::kUnreachable || Rational(d, target.metric->scale()) > bound) continue;
    returning.push_back(g);
    if (measure.word_length[v] == measure.radius) ++rep.boundary_hits;
  }
  rep.returning = returning.size();
  rep.diameter = relative_diameter(measure, returning, jobs);
  if (rep.diameter.witness_a != kNoVertex) {
    rep.witness_a = measure.describe(measure.labels[rep.diameter.witness_a]);
    rep.witness_b = measure.describe(measure.labels[rep.diameter.witness_b]);
  }
  return rep;
}

QIReport schwarz_milnor_probe(const DistanceOracle& source, const std::vector<VertexId>& source_core,
                              const DistanceOracle& target, const std::vector<VertexId>& target_core,
                              const std::vector<VertexId>& phi) {
  for (VertexId v : source_core)
    if (phi.at(v) == kNoVertex) throw Error(ErrorCode::BallTooSmall, "orbit map leaves the target truncation");
  struct Pair {
    Rational d, dt;
    VertexId a, b;
  };
  std::vector<Pair> pairs;
  QIReport rep;
  Rational lambda(1);
  Rational core_diam(0);
  for (std::size_t i = 0; i < source_core.size(); ++i)
    for (std::size_t j = i + 1; j < source_core.size(); ++j) {
      VertexId a = source_core[i], b = source_core[j];
      Rational d = source.distance(a, b);
      Rational dt = target.distance(phi[a], phi[b]);
      core_diam = max(core_diam, d);
      pairs.push_back({d, dt, a, b});
      if (d.is_zero()) continue;
      lambda = max(lambda, dt / d);
      if (dt.is_zero())
        ++rep.collapsed_pairs;
      else
        lambda = max(lambda, d / dt);
    }
  rep.pairs = pairs.size();
  rep.lambda = lambda;
  Rational k(0);
  for (const auto& p : pairs) {
    Rational excess = max(p.dt - lambda * p.d, p.d / lambda - p.dt);
    if (excess > k) {
      k = excess;
      rep.witness_a = p.a;
      rep.witness_b = p.b;
    }
  }
  rep.k = k;
  std::vector<VertexId> image;
  for (VertexId v : source_core) image.push_back(phi[v]);
  auto dist = multi_source_scaled(target, image);
  std::int64_t dens = 0;
  for (VertexId w : target_core) dens = std::max(dens, dist[w]);
  rep.density = Rational(dens, target.scale());
  // the lower bound says nothing at the scale of the core
  rep.not_qi = rep.pairs > 0 && !core_diam.is_zero() && k * Rational(2) * lambda >= core_diam;
  return rep;
}

}  // namespace ccl
