#include "ccl/graph/geodesic.hpp"

#include <algorithm>

#include "ccl/core/error.hpp"

namespace ccl {

ShortestPathForest::ShortestPathForest(const DistanceOracle& metric, VertexId source)
    : source_(source),
      parent_edge_(metric.graph().vertex_count(), kNone),
      parent_(metric.graph().vertex_count(), kNoVertex) {
  const MetricGraph& g = metric.graph();
  const auto& dist = metric.row(source);
  std::vector<char> seen(g.vertex_count(), 0);
  struct Frame {
    VertexId v;
    std::uint32_t next;
  };
  std::vector<Frame> stack{{source, 0}};
  seen[source] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto adj = g.neighbors(f.v);
    if (f.next == adj.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence inc = adj[f.next++];
    if (seen[inc.neighbor]) continue;
    if (dist[f.v] + metric.scaled_length(inc.edge) != dist[inc.neighbor]) continue;
    seen[inc.neighbor] = 1;
    parent_[inc.neighbor] = f.v;
    parent_edge_[inc.neighbor] = inc.edge;
    stack.push_back({inc.neighbor, 0});
  }
}

GeodesicPath ShortestPathForest::path_to(const MetricGraph& g, VertexId target) const {
  if (!reached(target))
    throw Error(ErrorCode::DisconnectedPair, std::to_string(source_) + " -> " + std::to_string(target));
  std::vector<EdgeId> rev;
  for (VertexId v = target; v != source_; v = parent_[v]) rev.push_back(parent_edge_[v]);
  GeodesicPath p = GeodesicPath::constant(source_);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) p.append(g, *it);
  p.canonical = true;
  return p;
}

GeodesicPath canonical_geodesic(const DistanceOracle& metric, VertexId u, VertexId v) {
  if (!metric.connected(u, v))
    throw Error(ErrorCode::DisconnectedPair, std::to_string(u) + " -> " + std::to_string(v));
  if (u == v) {
    auto p = GeodesicPath::constant(u);
    p.canonical = true;
    return p;
  }
  return ShortestPathForest(metric, u).path_to(metric.graph(), v);
}

}  // namespace ccl
