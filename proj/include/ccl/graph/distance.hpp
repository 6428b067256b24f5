#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include "ccl/graph/metric_graph.hpp"

namespace ccl {

// Exact shortest-path distances. Edge lengths are scaled by the lcm of their
// denominators so Dijkstra runs on integers; single-source rows are computed
// lazily and cached. Safe for concurrent readers.
class DistanceOracle {
 public:
  static constexpr std::int64_t kUnreachable = INT64_MAX;

  explicit DistanceOracle(std::shared_ptr<const MetricGraph> graph);
  ~DistanceOracle();

  const MetricGraph& graph() const { return *graph_; }
  const std::shared_ptr<const MetricGraph>& graph_ptr() const { return graph_; }
  std::int64_t scale() const { return scale_; }
  std::int64_t scaled_length(EdgeId e) const { return weights_[e]; }

  // row of scaled distances from source; kUnreachable marks other components
  const std::vector<std::int64_t>& row(VertexId source) const;

  Rational distance(VertexId u, VertexId v) const;
  Rational distance(const GraphPoint& p, const GraphPoint& q) const;
  bool connected(VertexId u, VertexId v) const { return graph_->component(u) == graph_->component(v); }

 private:
  Rational unscale(std::int64_t d) const { return Rational(d, scale_); }

  std::shared_ptr<const MetricGraph> graph_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> weights_;
  mutable std::vector<std::atomic<const std::vector<std::int64_t>*>> rows_;
  mutable std::mutex mutex_;
};

// single-source scaled distances without caching
std::vector<std::int64_t> dijkstra_scaled(const MetricGraph& g, const std::vector<std::int64_t>& weights,
                                          VertexId source);

}  // namespace ccl
