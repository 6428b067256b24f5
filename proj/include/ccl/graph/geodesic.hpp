#pragma once

#include <memory>
#include <vector>

#include "ccl/graph/distance.hpp"
#include "ccl/graph/path.hpp"

namespace ccl {

// Shortest-path tree from one source in which every vertex is reached by the
// lexicographically least vertex sequence among its shortest paths. Built by
// a depth-first walk of the shortest-path DAG that visits children in
// increasing id order; the first visit of a vertex is its least path.
class ShortestPathForest {
 public:
  ShortestPathForest(const DistanceOracle& metric, VertexId source);

  VertexId source() const { return source_; }
  bool reached(VertexId v) const { return v == source_ || parent_edge_[v] != kNone; }
  GeodesicPath path_to(const MetricGraph& g, VertexId target) const;

 private:
  static constexpr EdgeId kNone = UINT32_MAX;
  VertexId source_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> parent_;
};

GeodesicPath canonical_geodesic(const DistanceOracle& metric, VertexId u, VertexId v);

}  // namespace ccl
