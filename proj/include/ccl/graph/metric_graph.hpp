#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ccl/core/rational.hpp"

namespace ccl {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr VertexId kNoVertex = UINT32_MAX;

struct Edge {
  VertexId u;
  VertexId v;
  Rational length;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Immutable weighted graph. Adjacency lists are sorted by (neighbor id, edge
// id), which is the order the canonical tie-break walks them in.
class MetricGraph {
 public:
  MetricGraph() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find_label(std::string_view label) const;
  std::uint32_t component(VertexId v) const { return component_[v]; }
  std::size_t component_count() const { return component_count_; }
  VertexId other_end(EdgeId e, VertexId v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  // first edge id joining u and v, if any
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

 private:
  friend class GraphBuilder;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::vector<std::uint32_t> component_;
  std::size_t component_count_ = 0;
  std::unordered_map<std::string, VertexId> label_index_;
};

class GraphBuilder {
 public:
  VertexId add_vertex(std::string label = {});
  EdgeId add_edge(VertexId u, VertexId v, Rational length);
  std::size_t vertex_count() const { return labels_.size(); }
  void set_label(VertexId v, std::string label) { labels_.at(v) = std::move(label); }
  MetricGraph build() &&;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// A vertex, or a point strictly inside an edge at a rational offset measured
// from the edge's u endpoint. Offsets at the endpoints normalize to vertices.
class GraphPoint {
 public:
  static GraphPoint at_vertex(VertexId v) { return GraphPoint(v, kNoEdge, Rational(0)); }
  static GraphPoint on_edge(const MetricGraph& g, EdgeId e, const Rational& offset);

  bool is_vertex() const { return edge_ == kNoEdge; }
  VertexId vertex() const { return vertex_; }
  EdgeId edge() const { return edge_; }
  const Rational& offset() const { return offset_; }
  std::string str() const;

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;

 private:
  static constexpr EdgeId kNoEdge = UINT32_MAX;
  GraphPoint(VertexId v, EdgeId e, Rational off) : vertex_(v), edge_(e), offset_(off) {}
  VertexId vertex_;
  EdgeId edge_;
  Rational offset_;
};

}  // namespace ccl
