#include "ccl/graph/metric_graph.hpp"

#include <algorithm>

#include "ccl/core/error.hpp"

namespace ccl {

std::optional<VertexId> MetricGraph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> MetricGraph::edge_between(VertexId u, VertexId v) const {
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Incidence& inc, VertexId x) { return inc.neighbor < x; });
  if (it == adj.end() || it->neighbor != v) return std::nullopt;
  return it->edge;
}

VertexId GraphBuilder::add_vertex(std::string label) {
  if (label.empty()) label = std::to_string(labels_.size());
  labels_.push_back(std::move(label));
  return static_cast<VertexId>(labels_.size() - 1);
}

EdgeId GraphBuilder::add_edge(VertexId u, VertexId v, Rational length) {
  if (u >= labels_.size() || v >= labels_.size())
    throw Error(ErrorCode::FormatError, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::FormatError, "self-loop at vertex " + std::to_string(u));
  if (length.sign() <= 0) throw Error(ErrorCode::FormatError, "edge length must be positive");
  edges_.push_back({u, v, length});
  return static_cast<EdgeId>(edges_.size() - 1);
}

MetricGraph GraphBuilder::build() && {
  MetricGraph g;
  std::size_t n = labels_.size();
  g.labels_ = std::move(labels_);
  g.edges_ = std::move(edges_);
  std::vector<std::uint32_t> degree(n, 0);
  for (const auto& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adjacency_[fill[e.u]++] = {e.v, id};
    g.adjacency_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
              });
  }
  g.component_.assign(n, UINT32_MAX);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (g.component_[s] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(g.component_count_++);
    g.component_[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(x)) {
        if (g.component_[inc.neighbor] == UINT32_MAX) {
          g.component_[inc.neighbor] = c;
          stack.push_back(inc.neighbor);
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) g.label_index_.emplace(g.labels_[v], v);
  return g;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, EdgeId e, const Rational& offset) {
  const Edge& edge = g.edge(e);
  if (offset.sign() < 0 || offset > edge.length)
    throw Error(ErrorCode::ParameterOutOfRange, "edge offset outside [0, length]");
  if (offset.is_zero()) return at_vertex(edge.u);
  if (offset == edge.length) return at_vertex(edge.v);
  return GraphPoint(kNoVertex, e, offset);
}

std::string GraphPoint::str() const {
  if (is_vertex()) return "v" + std::to_string(vertex_);
  return "e" + std::to_string(edge_) + "@" + offset_.str();
}

}  // namespace ccl
