#include "ccl/graph/path.hpp"

#include <algorithm>

#include "ccl/core/error.hpp"

namespace ccl {

GeodesicPath GeodesicPath::constant(VertexId v) {
  GeodesicPath p;
  p.vertices = {v};
  p.cumulative = {Rational(0)};
  return p;
}

void GeodesicPath::append(const MetricGraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  VertexId at = vertices.back();
  if (edge.u != at && edge.v != at) throw Error(ErrorCode::FormatError, "edge does not continue path");
  vertices.push_back(edge.u == at ? edge.v : edge.u);
  edges.push_back(e);
  cumulative.push_back(cumulative.back() + edge.length);
}

Rational GeodesicPath::arclength_at(const Rational& t) const {
  if (t.sign() < 0 || t > Rational(1)) throw Error(ErrorCode::ParameterOutOfRange, "t = " + t.str());
  if (knots.empty()) return t * length();
  auto it = std::upper_bound(knots.begin(), knots.end(), t,
                             [](const Rational& x, const auto& k) { return x < k.first; });
  if (it == knots.end()) return knots.back().second;
  auto prev = std::prev(it);
  if (prev->first == t) return prev->second;
  Rational frac = (t - prev->first) / (it->first - prev->first);
  return prev->second + frac * (it->second - prev->second);
}

std::vector<Rational> GeodesicPath::breakpoints() const {
  std::vector<Rational> out;
  if (length().is_zero()) {
    out = {Rational(0), Rational(1)};
    return out;
  }
  if (knots.empty()) {
    for (const auto& c : cumulative) out.push_back(c / length());
  } else {
    // invert the piecewise-linear map at each vertex arclength; constant
    // stretches contribute both of their ends
    for (const auto& c : cumulative) {
      for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const auto& [t0, s0] = knots[i];
        const auto& [t1, s1] = knots[i + 1];
        if (s0 == s1) {
          if (c == s0) {
            out.push_back(t0);
            out.push_back(t1);
          }
        } else if (s0 <= c && c <= s1) {
          out.push_back(t0 + (c - s0) / (s1 - s0) * (t1 - t0));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

GraphPoint point_at_arclength(const MetricGraph& g, const GeodesicPath& path, const Rational& s) {
  const auto& cum = path.cumulative;
  auto it = std::upper_bound(cum.begin(), cum.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cum.begin());
  if (i == 0) return GraphPoint::at_vertex(path.vertices.front());
  --i;
  if (cum[i] == s || i == path.edges.size()) return GraphPoint::at_vertex(path.vertices[i]);
  EdgeId e = path.edges[i];
  Rational along = s - cum[i];
  const Edge& edge = g.edge(e);
  Rational offset = edge.u == path.vertices[i] ? along : edge.length - along;
  return GraphPoint::on_edge(g, e, offset);
}

GraphPoint eval_path(const MetricGraph& g, const GeodesicPath& path, const Rational& t) {
  return point_at_arclength(g, path, path.arclength_at(t));
}

GeodesicPath concatenate(const MetricGraph& g, const std::vector<GeodesicPath>& pieces,
                         const std::vector<Rational>& weights) {
  GeodesicPath out = GeodesicPath::constant(pieces.front().source());
  Rational total(0);
  for (const auto& w : weights) total += w;
  bool by_length = total.is_zero();
  if (by_length) {
    for (const auto& p : pieces) total += p.length();
  }
  std::vector<std::pair<Rational, Rational>> knots{{Rational(0), Rational(0)}};
  bool uniform = true;
  Rational param(0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    if (piece.source() != out.target()) throw Error(ErrorCode::CombingDomainMismatch, "pieces do not chain");
    Rational base = out.length();
    Rational w = by_length ? piece.length() : weights[i];
    Rational span = total.is_zero() ? Rational(0) : w / total;
    if (!by_length && piece.length() != w) uniform = false;
    if (!piece.uniform()) uniform = false;
    if (!span.is_zero()) {
      if (piece.uniform()) {
        knots.emplace_back(param + span, base + piece.length());
      } else {
        for (std::size_t k = 1; k < piece.knots.size(); ++k)
          knots.emplace_back(param + span * piece.knots[k].first, base + piece.knots[k].second);
      }
    }
    param += span;
    for (EdgeId e : piece.edges) out.append(g, e);
  }
  if (knots.size() == 1) knots.emplace_back(Rational(1), out.length());
  knots.back().first = Rational(1);
  if (!uniform) {
    // drop collinear interior knots so equal parametrizations compare equal
    std::vector<std::pair<Rational, Rational>> slim{knots.front()};
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
      const auto& a = slim.back();
      const auto& b = knots[i];
      const auto& c = knots[i + 1];
      if (b.first == a.first && b.second == a.second) continue;
      if ((b.second - a.second) * (c.first - b.first) == (c.second - b.second) * (b.first - a.first)) continue;
      slim.push_back(b);
    }
    slim.push_back(knots.back());
    if (!(slim.size() == 2 && slim[1].second == out.length() && slim[0].second.is_zero())) out.knots = slim;
  }
  return out;
}

GeodesicPath path_through(const MetricGraph& g, const std::vector<VertexId>& vertices) {
  GeodesicPath p = GeodesicPath::constant(vertices.front());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto e = g.edge_between(vertices[i - 1], vertices[i]);
    if (!e) throw Error(ErrorCode::FormatError, "no edge between consecutive path vertices");
    p.append(g, *e);
  }
  return p;
}

}  // namespace ccl
