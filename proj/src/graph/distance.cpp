#include "ccl/graph/distance.hpp"

#include <queue>

#include "ccl/core/error.hpp"

namespace ccl {

std::vector<std::int64_t> dijkstra_scaled(const MetricGraph& g, const std::vector<std::int64_t>& weights,
                                          VertexId source) {
  constexpr auto inf = DistanceOracle::kUnreachable;
  std::vector<std::int64_t> dist(g.vertex_count(), inf);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (const auto& inc : g.neighbors(x)) {
      std::int64_t nd = d + weights[inc.edge];
      if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        heap.emplace(nd, inc.neighbor);
      }
    }
  }
  return dist;
}

DistanceOracle::DistanceOracle(std::shared_ptr<const MetricGraph> graph)
    : graph_(std::move(graph)), rows_(graph_->vertex_count()) {
  for (const auto& e : graph_->edges()) scale_ = lcm_checked(scale_, e.length.den());
  weights_.reserve(graph_->edge_count());
  for (const auto& e : graph_->edges()) weights_.push_back((e.length * Rational(scale_)).num());
  for (auto& r : rows_) r.store(nullptr, std::memory_order_relaxed);
}

DistanceOracle::~DistanceOracle() {
  for (auto& r : rows_) delete r.load();
}

const std::vector<std::int64_t>& DistanceOracle::row(VertexId source) const {
  if (auto* r = rows_[source].load(std::memory_order_acquire)) return *r;
  std::lock_guard lock(mutex_);
  if (auto* r = rows_[source].load(std::memory_order_relaxed)) return *r;
  auto* fresh = new std::vector<std::int64_t>(dijkstra_scaled(*graph_, weights_, source));
  rows_[source].store(fresh, std::memory_order_release);
  return *fresh;
}

Rational DistanceOracle::distance(VertexId u, VertexId v) const {
  if (u == v) return Rational(0);
  if (!connected(u, v))
    throw Error(ErrorCode::DisconnectedPair, "vertices " + std::to_string(u) + " and " + std::to_string(v));
  return unscale(row(u)[v]);
}

Rational DistanceOracle::distance(const GraphPoint& p, const GraphPoint& q) const {
  if (p.is_vertex() && q.is_vertex()) return distance(p.vertex(), q.vertex());
  // endpoints to leave p from, with the cost of reaching them
  struct Exit {
    VertexId v;
    Rational cost;
  };
  auto exits = [&](const GraphPoint& x, Exit out[2]) -> int {
    if (x.is_vertex()) {
      out[0] = {x.vertex(), Rational(0)};
      return 1;
    }
    const Edge& e = graph_->edge(x.edge());
    out[0] = {e.u, x.offset()};
    out[1] = {e.v, e.length - x.offset()};
    return 2;
  };
  Exit pe[2], qe[2];
  int np = exits(p, pe), nq = exits(q, qe);
  if (!connected(pe[0].v, qe[0].v)) throw Error(ErrorCode::DisconnectedPair, p.str() + " and " + q.str());
  std::optional<Rational> best;
  if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge()) best = (p.offset() - q.offset()).abs();
  for (int i = 0; i < np; ++i) {
    const auto& r = row(pe[i].v);
    for (int j = 0; j < nq; ++j) {
      Rational d = pe[i].cost + unscale(r[qe[j].v]) + qe[j].cost;
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

}  // namespace ccl
