#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ccl/graph/distance.hpp"

namespace ccl {

// xi: Z -> T with T bipartite on K (vertex spaces) and L (gluing points).
// X_k = xi^-1(star(k)) is stored in its local order: the copy's own vertices
// in template order, then the attached gluing points.
struct TreeOfSpaces {
  std::shared_ptr<const DistanceOracle> z;
  std::shared_ptr<const MetricGraph> tree;
  std::vector<char> is_k;               // per T vertex
  std::vector<VertexId> xi;             // per Z vertex
  std::vector<VertexId> glue_point;     // per T vertex: xi^-1(l) for l in L, else kNoVertex
  std::vector<VertexId> k_vertices;     // T ids of K in increasing order
  std::vector<std::size_t> k_index_of;  // per T vertex, SIZE_MAX on L
  std::vector<std::vector<VertexId>> vertex_space;  // per K index
  Rational spike_length{1};
  // rooted spanning structure of T used for path queries
  std::vector<VertexId> parent;
  std::vector<std::uint32_t> depth;

  const MetricGraph& graph() const { return z->graph(); }
  std::size_t k_count() const { return k_vertices.size(); }
  // vertex sequence of the T path between two T vertices
  std::vector<VertexId> t_path(VertexId a, VertexId b) const;
  bool in_vertex_space(std::size_t k, VertexId v) const;
  // the K vertex whose space holds both points (first on the T path)
  std::size_t common_space(VertexId u, VertexId v) const;
};

struct SpaceCopy {
  std::shared_ptr<const MetricGraph> graph;
  std::string name;
};

struct Attachment {
  std::size_t copy;
  VertexId vertex;  // in the copy's graph
};

struct GluePointSpec {
  std::string name;
  std::vector<Attachment> attachments;
};

// Z is the disjoint union of the copies plus one vertex per gluing point,
// joined to each of its attachments by a spike edge of the given length.
// T has one K vertex per copy, then one L vertex per gluing point.
TreeOfSpaces glue_tree_of_spaces(const std::vector<SpaceCopy>& copies, const std::vector<GluePointSpec>& glue,
                                 Rational spike_length);

struct StructuralFinding {
  StructuralFinding() = default;
  explicit StructuralFinding(std::string name) : check(std::move(name)) {}
  std::string check;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
};

struct StructuralReport {
  bool ok = true;
  std::vector<StructuralFinding> findings;
  const StructuralFinding* find(const std::string& check) const;
};

// xi well defined, xi^-1(l) singletons, T acyclic and bipartite, and
// convexity of every X_k over pairs drawn from `core` (all Z vertices if
// empty): distances agree with the intrinsic X_k metric and canonical Z
// geodesics stay inside X_k.
StructuralReport structural_suite(const TreeOfSpaces& tos, const std::vector<VertexId>& core = {});

// Z in the graph interchange format, then
//   tree <n>, tedge <a> <b>, tkind <t> <K|L>, tlabel <t> <string>
//   xi <z-vertex> <t-vertex>
//   vspace <k> <vertex-list>
void write_tree_of_spaces(std::ostream& os, const TreeOfSpaces& tos);
std::string tree_of_spaces_to_string(const TreeOfSpaces& tos);
TreeOfSpaces tree_of_spaces_from_string(const std::string& text);

}  // namespace ccl
