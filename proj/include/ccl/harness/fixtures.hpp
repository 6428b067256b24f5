#pragma once

#include <memory>
#include <vector>

#include "ccl/coned/coned_space.hpp"
#include "ccl/group/cayley.hpp"
#include "ccl/tos/combined.hpp"
#include "ccl/tos/group_trees.hpp"

namespace ccl {

std::shared_ptr<const DistanceOracle> cycle_graph(int n, const std::string& prefix = "v");
// n vertices, each attached to a uniformly chosen earlier one, edge lengths
// drawn from {1/2, 1, 3/2}
std::shared_ptr<const DistanceOracle> random_tree(int n, std::uint64_t seed);
std::vector<VertexId> all_vertices(const MetricGraph& g);

std::shared_ptr<const Group> f2xz_group();

struct ConedFixtureSpec {
  std::shared_ptr<const Group> group;
  std::vector<Element> generators;
  std::vector<Subgroup> peripherals;
  Rational cone_length{1, 2};  // Farb cone edges of X
  int radius = 6;
  int core_radius = 3;
  Rational D{1, 2};  // radius of the graph cones attached to X
};

// X is the coned-off Cayley ball of the spec. One graph cone of radius D is
// attached over each group element of word length <= core_radius, and
// Gamma-hat extends the canonical combing of X.
struct ConedFixture {
  std::shared_ptr<const CayleySpace> x;
  ConeSpec spec;
  ConeValidation validation;
  std::shared_ptr<const ConedSpace> space;
  std::shared_ptr<const Combing> base;
  std::shared_ptr<const ExtendedCombing> gamma_hat;
  std::vector<VertexId> x_core;  // core elements and the Farb apexes next to them
  std::vector<VertexId> core;    // x_core and the attached apexes
  int core_radius = 0;
};

ConedFixture build_coned_fixture(const ConedFixtureSpec& spec);

// Cycles of the given sizes, each with its vertex 0 spiked to one shared
// gluing point: a tree of spaces with one L vertex and a K vertex per cycle.
struct CombinationFixture {
  std::shared_ptr<const TreeOfSpaces> tos;
  std::shared_ptr<const VertexSpaceFamily> family;
  std::shared_ptr<const CombinedCombing> gamma;
  VertexId glue = kNoVertex;
  std::vector<VertexId> core;  // ball of core_radius around the gluing point
  int core_radius = 0;
};

CombinationFixture build_combination(const std::vector<int>& sizes, const Rational& spike_length, int core_radius,
                                     FamilyMode mode);

AmalgamSpec zz_amalgam(int radius, int tree_radius, const Rational& spike_length);
HnnSpec z2_hnn(int radius, int tree_radius, const Rational& spike_length);

}  // namespace ccl
