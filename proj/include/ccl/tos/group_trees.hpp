#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccl/group/cayley.hpp"
#include "ccl/tos/tree_of_spaces.hpp"

namespace ccl {

struct FactorSource {
  std::shared_ptr<const Group> group;  // Cayley graph on its standard generators
  bool subdivide = false;
  SpaceLabel basepoint;             // default: the identity element
  std::string name;
};

// A *_C B with C trivial.
struct AmalgamSpec {
  FactorSource a, b;
  std::vector<std::string> c_generators;  // must be empty
  Rational spike_length{1};
  int radius = 3;       // word length in A * B
  int tree_radius = 3;  // Bass-Serre distance from the base copy of X_A
};

// A *_phi with C trivial: G = A * <t>, gluing g t · x^ to g · y^.
struct HnnSpec {
  FactorSource base;
  SpaceLabel x, y;
  std::vector<std::string> c_generators;  // must be empty
  std::string stable_letter = "t";
  Rational spike_length{1};
  int radius = 3;
  int tree_radius = 2;  // number of stable letters
};

// Symbolic name of a Z vertex: side 0/1 for the copies of X_A / X_B (the HNN
// build uses side 0 only), side 2 for gluing points, with elem the global
// group element.
struct ZLabel {
  std::uint8_t side = 0;
  PointKind kind = PointKind::Element;
  std::uint32_t index = 0;
  Element elem;
  friend bool operator==(const ZLabel&, const ZLabel&) = default;
};

struct ZLabelHash {
  std::size_t operator()(const ZLabel& l) const noexcept {
    return ElementHash{}(l.elem) * 131 + l.side * 17 + static_cast<std::size_t>(l.kind) * 5 + l.index;
  }
};

struct GroupTree {
  enum class Kind { Amalgam, Hnn };
  Kind kind = Kind::Amalgam;
  TreeOfSpaces tos;
  std::shared_ptr<const FreeProductGroup> group;
  std::vector<ZLabel> labels;  // per Z vertex
  std::unordered_map<ZLabel, VertexId, ZLabelHash> index;
  std::vector<Element> copy_rep;  // per K index
  std::vector<int> copy_side;
  std::vector<int> copy_radius;   // local truncation radius
  std::vector<SpaceLabel> basepoints;  // amalgam: x_A, x_B; HNN: x, y
  std::vector<std::shared_ptr<const CayleySpace>> factor_templates;  // full-radius template per side
  VertexId z = kNoVertex;  // gluing point of the identity
  int radius = 0;
  int tree_radius = 0;

  std::optional<VertexId> act(const Element& h, VertexId v) const;
  std::string describe(VertexId v) const;
};

GroupTree build_pushout(const AmalgamSpec& spec);
GroupTree build_coalescence(const HnnSpec& spec);

// Z vertices of global word length at most r (gluing points and copy
// points alike), i.e. the truncation's safe core at r.
std::vector<VertexId> group_tree_core(const GroupTree& tree, int r);

// every gluing point is joined exactly to the copy points the gluing
// relation prescribes, by spikes of the configured length
StructuralFinding spike_identification_check(const GroupTree& tree);

// stabilizer of the base gluing point over the tabled elements of word
// length <= table_radius, compared with <K_1, K_2> (amalgam) or <K^t, L> (HNN)
StructuralFinding stabilizer_bookkeeping(const GroupTree& tree, int table_radius = 2);

// action of the tabled elements on Z vertices (kNoVertex off the truncation)
std::vector<std::vector<VertexId>> group_tree_action(const GroupTree& tree, const std::vector<Element>& elements);

}  // namespace ccl
