#pragma once

#include <vector>

#include "ccl/graph/distance.hpp"

namespace ccl {

struct Ball {
  MetricGraph graph;
  std::vector<VertexId> to_ambient;    // ball id -> ambient id
  std::vector<VertexId> from_ambient;  // ambient id -> ball id or kNoVertex
  VertexId center = 0;                 // in ball ids
  Rational radius;
  // Points within core_radius of the center keep their ambient distances:
  // any path of length <= 2 * core_radius between them stays inside the ball.
  Rational core_radius;
  std::vector<VertexId> core;  // ball ids within core_radius, ascending
};

Ball ball(const DistanceOracle& metric, VertexId center, const Rational& r);

}  // namespace ccl
