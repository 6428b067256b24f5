#pragma once

#include <vector>

#include "ccl/cert/checks.hpp"

namespace ccl {

enum class ThinDirection { Forward, Backward };

// Slack measured on one triple against one candidate subspace.
struct ThinMeasure {
  bool meets = false;        // both combing lines meet the subspace
  bool restriction = false;  // item (3)
  Rational fellow;           // item (1): max of endpoint gap and Hausdorff distance
  Rational item2;            // d(a,b) - max{c1,c1'} d(ends), or the backward mirror
  Rational item4;            // near-additivity excess
  VertexId p1 = kNoVertex, p2 = kNoVertex, a = kNoVertex, b = kNoVertex;
  Rational c0, c0p, c1, c1p;
};

// Candidate subspaces are vertex sets; an edge belongs to a subspace when both
// of its ends do.
ThinMeasure thin_measure(const PathCache& cache, const std::vector<char>& member, ThinDirection dir,
                         VertexId t0, VertexId t1, VertexId t2);

// Hausdorff distance between the images of two edge paths given as vertex and
// edge sequences.
Rational hausdorff(const DistanceOracle& metric, std::span<const VertexId> va, std::span<const EdgeId> ea,
                   std::span<const VertexId> vb, std::span<const EdgeId> eb);

// Channels: 0 the least D that the published items (D, 4D) need, 1 the same
// for the relaxed reading (2D, 8D), 2..4 the fellow-travel, item-2 and item-4
// slack on the candidate chosen for channel 0, 5 an indicator for triples no
// candidate serves.
Display thin_display(const PathCache& cache, const std::vector<std::vector<char>>& members, ThinDirection dir,
                     const Rational& D);

// Throws SubspaceNotConvex when a combing line between two vertices of a
// candidate (inside the core) leaves it, and TriplesTooShort when no triple in
// the core clears the 2D distance threshold. With check_subspace_gcc the
// restriction of the combing to each candidate is certified at (E, C) as a
// part of the report.
CertReport check_thinness(const Combing& g, const std::vector<std::vector<VertexId>>& candidates,
                          const std::vector<VertexId>& core, const Rational& C, const Rational& D,
                          const Rational& E, ThinDirection dir, const SamplePlan& plan,
                          bool check_subspace_gcc = true);

std::vector<std::vector<char>> membership(std::size_t n, const std::vector<std::vector<VertexId>>& candidates);

}  // namespace ccl
