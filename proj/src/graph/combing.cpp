#include "ccl/graph/combing.hpp"

#include "ccl/core/error.hpp"

namespace ccl {

CanonicalCombing::CanonicalCombing(std::shared_ptr<const DistanceOracle> metric)
    : Combing(std::move(metric)), forests_(graph().vertex_count()) {}

const ShortestPathForest& CanonicalCombing::forest(VertexId source) const {
  std::lock_guard lock(mutex_);
  auto& slot = forests_[source];
  if (!slot) slot = std::make_unique<ShortestPathForest>(metric(), source);
  return *slot;
}

GeodesicPath CanonicalCombing::path(VertexId from, VertexId to) const {
  if (from == to) {
    auto p = GeodesicPath::constant(from);
    p.canonical = true;
    return p;
  }
  return forest(from).path_to(graph(), to);
}

OverrideCombing::OverrideCombing(std::shared_ptr<const Combing> base)
    : Combing(base->metric_ptr()), base_(std::move(base)) {}

void OverrideCombing::set(VertexId from, VertexId to, GeodesicPath path) {
  if (path.source() != from || path.target() != to)
    throw Error(ErrorCode::CombingDomainMismatch, "override path endpoints differ from the pair");
  table_[{from, to}] = std::move(path);
}

GeodesicPath OverrideCombing::path(VertexId from, VertexId to) const {
  auto it = table_.find({from, to});
  if (it != table_.end()) return it->second;
  return base_->path(from, to);
}

std::shared_ptr<const DistanceOracle> make_metric(MetricGraph g) {
  return std::make_shared<const DistanceOracle>(std::make_shared<const MetricGraph>(std::move(g)));
}

}  // namespace ccl
