#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccl/graph/distance.hpp"
#include "ccl/group/group.hpp"

namespace ccl {

enum class PointKind : std::uint8_t { Element = 0, Apex = 1, Midpoint = 2 };

// Symbolic name of a vertex of a (coned, possibly subdivided) Cayley ball:
// a group element, the apex of coset elem·H_index, or the midpoint of the
// edge from elem along generator `index`.
struct SpaceLabel {
  PointKind kind = PointKind::Element;
  std::uint32_t index = 0;
  Element elem;
  friend bool operator==(const SpaceLabel&, const SpaceLabel&) = default;
};

struct SpaceLabelHash {
  std::size_t operator()(const SpaceLabel& l) const noexcept {
    return ElementHash{}(l.elem) * 31 + static_cast<std::size_t>(l.kind) * 7 + l.index;
  }
};

struct ConedCayleySpec {
  std::vector<Element> generators;
  std::vector<Subgroup> peripherals;
  Rational cone_length{1, 2};
  int radius = 0;
  bool subdivide = false;  // split every Cayley edge at its midpoint
};

class CayleySpace {
 public:
  std::shared_ptr<const Group> group;
  std::vector<Element> generators;  // normalized S: no identity, no repeats, no formal inverses
  std::vector<Subgroup> peripherals;
  std::vector<GenMask> masks;
  Rational cone_length{1, 2};
  int radius = 0;
  bool subdivided = false;
  std::shared_ptr<const DistanceOracle> metric;
  std::vector<SpaceLabel> labels;
  std::vector<int> word_length;  // S-word length of element vertices, -1 otherwise
  std::vector<VertexId> cone_vertices;

  const MetricGraph& graph() const { return metric->graph(); }
  std::optional<VertexId> find(const SpaceLabel& l) const;
  std::optional<VertexId> find_element(const Element& g) const { return find({PointKind::Element, 0, g}); }
  VertexId identity_vertex() const { return 0; }
  SpaceLabel translate(const Element& g, const SpaceLabel& l) const;
  std::optional<VertexId> act(const Element& g, VertexId v) const;
  bool is_cone(VertexId v) const { return labels[v].kind == PointKind::Apex; }
  std::string describe(const SpaceLabel& l) const;
  // element vertices with S-word length at most r, in id order
  std::vector<VertexId> element_vertices(int r) const;

 private:
  friend CayleySpace coned_cayley_ball(std::shared_ptr<const Group>, const ConedCayleySpec&);
  std::unordered_map<SpaceLabel, VertexId, SpaceLabelHash> index_;
};

CayleySpace cayley_ball(std::shared_ptr<const Group> group, const std::vector<Element>& generators, int radius);
CayleySpace coned_cayley_ball(std::shared_ptr<const Group> group, const ConedCayleySpec& spec);

// Left action of a list of elements on a truncation; kNoVertex marks images
// that fall outside the ball.
struct BallAction {
  std::vector<Element> elements;
  std::vector<std::vector<VertexId>> table;  // table[i][v] = elements[i] · v
};

BallAction make_ball_action(const CayleySpace& space, const std::vector<Element>& elements);
// the standard generators, their inverses and the identity
std::vector<Element> generator_table(const Group& group, const std::vector<Element>& generators);
// all elements of S-word length <= r, in breadth-first order
std::vector<Element> element_ball(const Group& group, const std::vector<Element>& generators, int r);

}  // namespace ccl
