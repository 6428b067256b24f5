#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ccl/graph/geodesic.hpp"

namespace ccl {

// A bicombing restricted to vertex endpoints: a path for every ordered pair.
class Combing {
 public:
  explicit Combing(std::shared_ptr<const DistanceOracle> metric) : metric_(std::move(metric)) {}
  virtual ~Combing() = default;

  const MetricGraph& graph() const { return metric_->graph(); }
  const DistanceOracle& metric() const { return *metric_; }
  const std::shared_ptr<const DistanceOracle>& metric_ptr() const { return metric_; }

  virtual GeodesicPath path(VertexId from, VertexId to) const = 0;
  virtual std::string name() const = 0;

  GraphPoint eval(VertexId from, VertexId to, const Rational& t) const {
    return eval_path(graph(), path(from, to), t);
  }

 private:
  std::shared_ptr<const DistanceOracle> metric_;
};

// Lexicographically least shortest paths, from per-source forests.
class CanonicalCombing : public Combing {
 public:
  explicit CanonicalCombing(std::shared_ptr<const DistanceOracle> metric);
  GeodesicPath path(VertexId from, VertexId to) const override;
  std::string name() const override { return "canonical"; }

 private:
  const ShortestPathForest& forest(VertexId source) const;
  mutable std::vector<std::unique_ptr<ShortestPathForest>> forests_;
  mutable std::mutex mutex_;
};

// A base combing with some ordered pairs overridden by explicit paths.
class OverrideCombing : public Combing {
 public:
  explicit OverrideCombing(std::shared_ptr<const Combing> base);
  void set(VertexId from, VertexId to, GeodesicPath path);
  GeodesicPath path(VertexId from, VertexId to) const override;
  std::string name() const override { return base_->name() + "+override"; }

 private:
  std::shared_ptr<const Combing> base_;
  std::map<std::pair<VertexId, VertexId>, GeodesicPath> table_;
};

std::shared_ptr<const DistanceOracle> make_metric(MetricGraph g);

}  // namespace ccl
