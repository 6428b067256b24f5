#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccl/group/cayley.hpp"

namespace ccl {

struct RelativeDiameter {
  Rational value;          // max over reachable pairs
  bool reachable = true;   // false if some pair lies in different components
  VertexId witness_a = kNoVertex;
  VertexId witness_b = kNoVertex;
};

// Max pairwise coned-off distance among the given element vertices. Rows are
// computed one source at a time and not cached, so large sets stay cheap in
// memory.
RelativeDiameter relative_diameter(const CayleySpace& coned, const std::vector<Element>& elements,
                                   unsigned jobs = 1);

struct ProperProbeReport {
  int r = 0;
  std::size_t returning = 0;       // |V_r|
  std::size_t boundary_hits = 0;   // members of V_r on the enumeration boundary
  RelativeDiameter diameter;
  std::string witness_a, witness_b;
};

// V_r = {g in the measuring ball : d(x*, g·x*) <= r} for the target action;
// its relative diameter is measured in `measure`.
ProperProbeReport relative_properness_probe(const CayleySpace& measure, const CayleySpace& target,
                                            const SpaceLabel& basepoint, int r, unsigned jobs = 1);

struct QIReport {
  Rational lambda{1};
  Rational k{0};
  Rational density;  // max distance from a target-core vertex to the image
  std::size_t pairs = 0;
  std::size_t collapsed_pairs = 0;
  bool not_qi = false;
  VertexId witness_a = kNoVertex, witness_b = kNoVertex;
};

// Empirical quasi-isometry constants of phi over all pairs of source_core.
// phi[v] is the image of source vertex v (kNoVertex = undefined).
QIReport schwarz_milnor_probe(const DistanceOracle& source, const std::vector<VertexId>& source_core,
                              const DistanceOracle& target, const std::vector<VertexId>& target_core,
                              const std::vector<VertexId>& phi);

// scaled distances from a set of sources
std::vector<std::int64_t> multi_source_scaled(const DistanceOracle& metric, const std::vector<VertexId>& sources);

}  // namespace ccl
