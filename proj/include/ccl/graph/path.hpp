#pragma once

#include <utility>
#include <vector>

#include "ccl/graph/metric_graph.hpp"

namespace ccl {

// A combing line: an edge path plus a parametrization [0,1] -> arclength.
// With no knots the parametrization is proportional to arclength. Knots
// (param, arclength) describe a piecewise-linear reparametrization, used when
// pieces of different speeds are concatenated.
struct GeodesicPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<Rational> cumulative;  // cumulative[i] = arclength at vertices[i]
  std::vector<std::pair<Rational, Rational>> knots;
  bool canonical = false;

  static GeodesicPath constant(VertexId v);
  // extends the path along edge e (which must start at the current target)
  void append(const MetricGraph& g, EdgeId e);

  VertexId source() const { return vertices.front(); }
  VertexId target() const { return vertices.back(); }
  Rational length() const { return cumulative.back(); }
  std::size_t segment_count() const { return edges.size(); }
  bool uniform() const { return knots.empty(); }

  Rational arclength_at(const Rational& t) const;
  // parameters at which the path sits at one of its vertices
  std::vector<Rational> breakpoints() const;
};

GraphPoint eval_path(const MetricGraph& g, const GeodesicPath& path, const Rational& t);
GraphPoint point_at_arclength(const MetricGraph& g, const GeodesicPath& path, const Rational& s);

// Concatenates pieces; piece i occupies a parameter interval proportional to
// weights[i] (all-zero weights fall back to lengths). Each piece keeps its own
// internal parametrization.
GeodesicPath concatenate(const MetricGraph& g, const std::vector<GeodesicPath>& pieces,
                         const std::vector<Rational>& weights);

// path through the given vertex sequence using the first edge between
// consecutive vertices
GeodesicPath path_through(const MetricGraph& g, const std::vector<VertexId>& vertices);

}  // namespace ccl
