#include "ccl/graph/ball.hpp"

#include "ccl/core/error.hpp"

namespace ccl {

Ball ball(const DistanceOracle& metric, VertexId center, const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorCode::ParameterOutOfRange, "negative ball radius");
  const MetricGraph& g = metric.graph();
  const auto& dist = metric.row(center);
  Ball out;
  out.radius = r;
  out.core_radius = r / Rational(2);
  out.from_ambient.assign(g.vertex_count(), kNoVertex);
  GraphBuilder b;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == DistanceOracle::kUnreachable) continue;
    Rational d(dist[v], metric.scale());
    if (d > r) continue;
    out.from_ambient[v] = b.add_vertex(g.label(v));
    out.to_ambient.push_back(v);
    if (d <= out.core_radius) out.core.push_back(out.from_ambient[v]);
  }
  for (const auto& e : g.edges()) {
    VertexId u = out.from_ambient[e.u], v = out.from_ambient[e.v];
    if (u != kNoVertex && v != kNoVertex) b.add_edge(u, v, e.length);
  }
  out.graph = std::move(b).build();
  out.center = out.from_ambient[center];
  return out;
}

}  // namespace ccl
