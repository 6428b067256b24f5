#include "ccl/group/cayley.hpp"

#include <algorithm>
#include <deque>

#include "ccl/core/error.hpp"

namespace ccl {

namespace {

std::vector<Element> normalize_generators(const Group& group, const std::vector<Element>& gens) {
  std::vector<Element> out;
  for (const auto& s : gens) {
    if (group.is_identity(s)) continue;
    bool dup = false;
    for (const auto& t : out)
      if (t == s || t == group.inverse(s)) dup = true;
    if (!dup) out.push_back(s);
  }
  return out;
}

}  // namespace

std::optional<VertexId> CayleySpace::find(const SpaceLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SpaceLabel CayleySpace::translate(const Element& g, const SpaceLabel& l) const {
  SpaceLabel out = l;
  out.elem = group->multiply(g, l.elem);
  if (l.kind == PointKind::Apex) out.elem = group->coset_rep(masks[l.index], out.elem);
  return out;
}

std::optional<VertexId> CayleySpace::act(const Element& g, VertexId v) const { return find(translate(g, labels[v])); }

std::string CayleySpace::describe(const SpaceLabel& l) const {
  switch (l.kind) {
    case PointKind::Element: return group->format(l.elem);
    case PointKind::Apex: return "cone[" + peripherals[l.index].name + "](" + group->format(l.elem) + ")";
    case PointKind::Midpoint:
      return "mid[" + group->format(generators[l.index]) + "](" + group->format(l.elem) + ")";
  }
  return "?";
}

std::vector<VertexId> CayleySpace::element_vertices(int r) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < labels.size(); ++v)
    if (labels[v].kind == PointKind::Element && word_length[v] <= r) out.push_back(v);
  return out;
}

std::vector<Element> element_ball(const Group& group, const std::vector<Element>& generators, int r) {
  auto gens = normalize_generators(group, generators);
  std::vector<Element> steps;
  for (const auto& s : gens) {
    steps.push_back(s);
    Element inv = group.inverse(s);
    if (inv != s) steps.push_back(inv);
  }
  std::vector<Element> order{group.identity()};
  std::unordered_map<Element, int, ElementHash> depth{{group.identity(), 0}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = depth[order[i]];
    if (d == r) continue;
    for (const auto& s : steps) {
      Element h = group.multiply(order[i], s);
      if (depth.emplace(h, d + 1).second) order.push_back(h);
    }
  }
  return order;
}

CayleySpace cayley_ball(std::shared_ptr<const Group> group, const std::vector<Element>& generators, int radius) {
  ConedCayleySpec spec;
  spec.generators = generators;
  spec.radius = radius;
  return coned_cayley_ball(std::move(group), spec);
}

CayleySpace coned_cayley_ball(std::shared_ptr<const Group> group, const ConedCayleySpec& spec) {
  if (spec.radius < 0) throw Error(ErrorCode::ParameterOutOfRange, "negative radius");
  if (spec.cone_length.sign() <= 0) throw Error(ErrorCode::ParameterOutOfRange, "cone length must be positive");
  CayleySpace sp;
  sp.group = group;
  sp.generators = normalize_generators(*group, spec.generators);
  sp.peripherals = spec.peripherals;
  for (const auto& h : spec.peripherals) sp.masks.push_back(group->mask(h));
  sp.cone_length = spec.cone_length;
  sp.radius = spec.radius;
  sp.subdivided = spec.subdivide;
  if (spec.subdivide) {
    for (const auto& s : sp.generators)
      if (group->inverse(s) == s)
        throw Error(ErrorCode::UnsupportedGroup, "cannot subdivide edges of an involution generator");
  }

  GraphBuilder b;
  auto add = [&](SpaceLabel l, int len) {
    VertexId v = b.add_vertex(sp.describe(l));
    sp.index_.emplace(l, v);
    sp.labels.push_back(std::move(l));
    sp.word_length.push_back(len);
    return v;
  };
  auto elements = element_ball(*group, sp.generators, spec.radius);
  for (const auto& g : elements) add({PointKind::Element, 0, g}, static_cast<int>(group->word_length(g)));
  // S-word length from the breadth-first order, which may differ from the
  // standard word length when S is not the standard generating set
  {
    std::unordered_map<Element, int, ElementHash> depth{{group->identity(), 0}};
    for (const auto& g : elements) {
      int d = depth[g];
      sp.word_length[*sp.find_element(g)] = d;
      for (const auto& s : sp.generators) {
        for (const auto& step : {s, group->inverse(s)}) depth.emplace(group->multiply(g, step), d + 1);
      }
    }
  }
  const std::size_t n_elements = elements.size();
  for (VertexId v = 0; v < n_elements; ++v) {
    const Element g = sp.labels[v].elem;
    for (std::uint32_t i = 0; i < sp.generators.size(); ++i) {
      auto w = sp.find_element(group->multiply(g, sp.generators[i]));
      if (!w) continue;
      bool involution = group->inverse(sp.generators[i]) == sp.generators[i];
      if (involution && *w < v) continue;
      if (spec.subdivide) {
        VertexId m = add({PointKind::Midpoint, i, g}, -1);
        b.add_edge(v, m, Rational(1, 2));
        b.add_edge(m, *w, Rational(1, 2));
      } else {
        b.add_edge(v, *w, Rational(1));
      }
    }
  }
  for (std::uint32_t p = 0; p < sp.masks.size(); ++p) {
    for (VertexId v = 0; v < n_elements; ++v) {
      SpaceLabel apex{PointKind::Apex, p, group->coset_rep(sp.masks[p], sp.labels[v].elem)};
      auto a = sp.find(apex);
      if (!a) {
        a = add(apex, -1);
        sp.cone_vertices.push_back(*a);
      }
      b.add_edge(*a, v, spec.cone_length);
    }
  }
  sp.metric = std::make_shared<const DistanceOracle>(std::make_shared<const MetricGraph>(std::move(b).build()));
  return sp;
}

std::vector<Element> generator_table(const Group& group, const std::vector<Element>& generators) {
  std::vector<Element> out{group.identity()};
  for (const auto& s : normalize_generators(group, generators)) {
    out.push_back(s);
    Element inv = group.inverse(s);
    if (inv != s) out.push_back(inv);
  }
  return out;
}

BallAction make_ball_action(const CayleySpace& space, const std::vector<Element>& elements) {
  BallAction act;
  act.elements = elements;
  for (const auto& g : elements) {
    std::vector<VertexId> row(space.labels.size(), kNoVertex);
    for (VertexId v = 0; v < space.labels.size(); ++v) {
      if (auto w = space.act(g, v)) row[v] = *w;
    }
    act.table.push_back(std::move(row));
  }
  return act;
}

}  // namespace ccl
