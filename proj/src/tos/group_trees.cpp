#include "ccl/tos/group_trees.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ccl/core/error.hpp"
#include "ccl/core/union_find.hpp"

namespace ccl {

namespace {

std::vector<Element> standard_generators(const Group& g) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.generator_names().size(); ++i) out.push_back(g.generator(i));
  return out;
}

struct GlueInstance {
  std::size_t copy;
  VertexId vertex;
  Element key;
};

class Builder {
 public:
  Builder(GroupTree::Kind kind, std::vector<FactorSource> sources, int radius, int tree_radius)
      : sources_(std::move(sources)) {
    out.kind = kind;
    out.radius = radius;
    out.tree_radius = tree_radius;
    if (radius < 1 || tree_radius < 1)
      throw Error(ErrorCode::RadiusTooSmall, "radius and tree radius must be at least 1");
    for (const auto& s : sources_)
      if (!s.group) throw Error(ErrorCode::UnsupportedGroup, "missing factor group");
  }

  GroupTree out;

  const FactorSource& source(int side) const { return sources_[static_cast<std::size_t>(side)]; }

  std::shared_ptr<const CayleySpace> tmpl(int side, int rho) {
    auto key = std::make_pair(side, rho);
    auto it = templates_.find(key);
    if (it != templates_.end()) return it->second;
    ConedCayleySpec spec;
    spec.generators = standard_generators(*source(side).group);
    spec.radius = rho;
    spec.subdivide = source(side).subdivide;
    auto t = std::make_shared<const CayleySpace>(coned_cayley_ball(source(side).group, spec));
    templates_[key] = t;
    return t;
  }

  Element global(int side, const Element& rep, const Element& local) const {
    return out.group->multiply(rep, out.group->embed(static_cast<std::size_t>(side), local));
  }

  // registers copies (side, rep) for every element of the G-ball
  template <class Hops>
  void enumerate_copies(const std::vector<int>& sides, Hops hops) {
    std::set<std::pair<int, Element>> seen;
    for (const auto& h : element_ball(*out.group, standard_generators(*out.group), out.radius)) {
      for (int side : sides) {
        Element rep = out.group->split_last(h, static_cast<std::size_t>(side)).first;
        if (!seen.insert({side, rep}).second) continue;
        if (hops(side, rep) > out.tree_radius) continue;
        int rho = out.radius - static_cast<int>(out.group->word_length(rep));
        if (rho < 0) continue;
        out.copy_rep.push_back(rep);
        out.copy_side.push_back(side);
        out.copy_radius.push_back(rho);
      }
    }
  }

  void finish(const std::vector<GlueInstance>& instances) {
    // the gluing relation identifies instances with equal keys
    UnionFind uf;
    std::unordered_map<Element, std::size_t, ElementHash> first;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      uf.add();
      auto [it, fresh] = first.emplace(instances[i].key, i);
      if (!fresh) uf.unite(it->second, i);
    }
    std::map<std::size_t, std::size_t> class_index;
    std::vector<GluePointSpec> glue;
    std::vector<Element> glue_key;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      std::size_t root = uf.find(i);
      auto [it, fresh] = class_index.emplace(root, glue.size());
      if (fresh) {
        glue.push_back({"z(" + out.group->format(instances[i].key) + ")", {}});
        glue_key.push_back(instances[i].key);
      }
      glue[it->second].attachments.push_back({instances[i].copy, instances[i].vertex});
    }
    prune(glue, glue_key);
    std::vector<SpaceCopy> copies;
    for (std::size_t c = 0; c < out.copy_rep.size(); ++c) {
      auto t = tmpl(out.copy_side[c], out.copy_radius[c]);
      copies.push_back({t->metric->graph_ptr(),
                        source(out.copy_side[c]).name + "[" + out.group->format(out.copy_rep[c]) + "]"});
      for (const auto& l : t->labels) {
        if (l.kind == PointKind::Apex) throw Error(ErrorCode::UnsupportedGroup, "coned vertex spaces in splittings");
        out.labels.push_back({static_cast<std::uint8_t>(out.copy_side[c]), l.kind, l.index,
                              global(out.copy_side[c], out.copy_rep[c], l.elem)});
      }
    }
    for (const auto& k : glue_key) out.labels.push_back({2, PointKind::Element, 0, k});
    out.tos = glue_tree_of_spaces(copies, glue, spike_length);
    for (VertexId v = 0; v < out.labels.size(); ++v) {
      if (!out.index.emplace(out.labels[v], v).second)
        throw Error(ErrorCode::BuildError, "duplicate point " + out.tos.graph().label(v));
    }
    auto z = out.index.find(ZLabel{2, PointKind::Element, 0, out.group->identity()});
    if (z == out.index.end()) throw Error(ErrorCode::RadiusTooSmall, "base gluing point missing");
    out.z = z->second;
    for (std::size_t s = 0; s < sources_.size(); ++s) out.factor_templates.push_back(tmpl(int(s), out.radius));
  }

  Rational spike_length{1};

 private:
  // Truncation can strand copies whose gluing partners fell outside the
  // ball; keep the component of the base copy.
  void prune(std::vector<GluePointSpec>& glue, std::vector<Element>& glue_key) {
    std::size_t nc = out.copy_rep.size();
    std::vector<std::vector<std::size_t>> by_copy(nc);
    for (std::size_t i = 0; i < glue.size(); ++i)
      for (const auto& a : glue[i].attachments) by_copy[a.copy].push_back(i);
    std::vector<char> keep_copy(nc, 0), keep_glue(glue.size(), 0);
    std::vector<std::size_t> stack{0};
    keep_copy[0] = 1;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      for (std::size_t i : by_copy[c]) {
        if (keep_glue[i]) continue;
        keep_glue[i] = 1;
        for (const auto& a : glue[i].attachments)
          if (!keep_copy[a.copy]) keep_copy[a.copy] = 1, stack.push_back(a.copy);
      }
    }
    std::vector<std::size_t> renumber(nc, SIZE_MAX);
    std::vector<Element> reps;
    std::vector<int> sides, radii;
    for (std::size_t c = 0; c < nc; ++c)
      if (keep_copy[c]) {
        renumber[c] = reps.size();
        reps.push_back(out.copy_rep[c]);
        sides.push_back(out.copy_side[c]);
        radii.push_back(out.copy_radius[c]);
      }
    out.copy_rep = std::move(reps);
    out.copy_side = std::move(sides);
    out.copy_radius = std::move(radii);
    std::vector<GluePointSpec> kept;
    std::vector<Element> kept_key;
    for (std::size_t i = 0; i < glue.size(); ++i) {
      if (!keep_glue[i]) continue;
      for (auto& a : glue[i].attachments) a.copy = renumber[a.copy];
      kept.push_back(std::move(glue[i]));
      kept_key.push_back(std::move(glue_key[i]));
    }
    glue = std::move(kept);
    glue_key = std::move(kept_key);
  }

  std::vector<FactorSource> sources_;
  std::map<std::pair<int, int>, std::shared_ptr<const CayleySpace>> templates_;
};

}  // namespace

std::optional<VertexId> GroupTree::act(const Element& h, VertexId v) const {
  ZLabel l = labels[v];
  l.elem = group->multiply(h, l.elem);
  auto it = index.find(l);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string GroupTree::describe(VertexId v) const { return tos.graph().label(v); }

GroupTree build_pushout(const AmalgamSpec& spec) {
  if (!spec.c_generators.empty())
    throw Error(ErrorCode::UnsupportedGroup, "only trivial amalgamated subgroups are supported");
  Builder b(GroupTree::Kind::Amalgam, {spec.a, spec.b}, spec.radius, spec.tree_radius);
  b.spike_length = spec.spike_length;
  b.out.group = std::make_shared<const FreeProductGroup>(
      std::vector<std::shared_ptr<const Group>>{spec.a.group, spec.b.group});
  b.out.basepoints = {spec.a.basepoint, spec.b.basepoint};
  const auto& g = *b.out.group;
  // Bass-Serre distance: gA sits at twice its B-syllable count, gB one further
  auto hops = [&](int side, const Element& rep) {
    int bs = 0;
    for (const auto& syl : g.syllables(rep)) bs += syl.factor == 1;
    return 2 * bs + side;
  };
  b.enumerate_copies({0, 1}, hops);
  std::vector<GlueInstance> instances;
  for (std::size_t c = 0; c < b.out.copy_rep.size(); ++c) {
    int side = b.out.copy_side[c];
    auto t = b.tmpl(side, b.out.copy_radius[c]);
    const SpaceLabel& x = b.out.basepoints[static_cast<std::size_t>(side)];
    for (VertexId v = 0; v < t->labels.size(); ++v) {
      if (t->labels[v].kind != PointKind::Element) continue;
      auto at = t->find(t->translate(t->labels[v].elem, x));
      if (!at) continue;
      instances.push_back({c, *at, b.global(side, b.out.copy_rep[c], t->labels[v].elem)});
    }
  }
  b.finish(instances);
  return std::move(b.out);
}

GroupTree build_coalescence(const HnnSpec& spec) {
  if (!spec.c_generators.empty())
    throw Error(ErrorCode::UnsupportedGroup, "only trivial associated subgroups are supported");
  if (spec.x.kind == spec.y.kind && spec.x.index == spec.y.index)
    throw Error(ErrorCode::SameOrbitBasepoints, "x and y lie in one orbit of the vertex group");
  FactorSource letter;
  letter.group = make_group(GroupSpec::free(1, {spec.stable_letter}));
  letter.name = spec.stable_letter;
  Builder b(GroupTree::Kind::Hnn, {spec.base, letter}, spec.radius, spec.tree_radius);
  b.spike_length = spec.spike_length;
  b.out.group = std::make_shared<const FreeProductGroup>(
      std::vector<std::shared_ptr<const Group>>{spec.base.group, letter.group});
  b.out.basepoints = {spec.x, spec.y};
  const auto& g = *b.out.group;
  auto hops = [&](int, const Element& rep) {
    std::int64_t n = 0;
    for (const auto& syl : g.syllables(rep))
      if (syl.factor == 1) n += g.factor(1).word_length(syl.local);
    return static_cast<int>(n);
  };
  b.enumerate_copies({0}, hops);
  // the vertex group must not fix x or y: the gluing assumes trivial K and L
  auto full = b.tmpl(0, spec.radius);
  for (const SpaceLabel* p : {&spec.x, &spec.y}) {
    auto at = full->find(*p);
    if (!at) throw Error(ErrorCode::ElementOutsideBall, "basepoint " + full->describe(*p));
    for (const auto& a : generator_table(*spec.base.group, full->generators))
      if (!spec.base.group->is_identity(a) && full->act(a, *at) == at)
        throw Error(ErrorCode::UnsupportedGroup, "basepoint with nontrivial stabilizer");
  }
  Element t_inv = g.embed(1, letter.group->inverse(letter.group->generator(0)));
  std::vector<GlueInstance> instances;
  for (std::size_t c = 0; c < b.out.copy_rep.size(); ++c) {
    auto t = b.tmpl(0, b.out.copy_radius[c]);
    for (VertexId v = 0; v < t->labels.size(); ++v) {
      if (t->labels[v].kind != PointKind::Element) continue;
      Element ga = b.global(0, b.out.copy_rep[c], t->labels[v].elem);
      // g a x^ is identified with g a t^-1 y^
      if (auto at = t->find(t->translate(t->labels[v].elem, spec.x))) instances.push_back({c, *at, g.multiply(ga, t_inv)});
      if (auto at = t->find(t->translate(t->labels[v].elem, spec.y))) instances.push_back({c, *at, ga});
    }
  }
  b.finish(instances);
  return std::move(b.out);
}

std::vector<VertexId> group_tree_core(const GroupTree& tree, int r) {
  std::vector<VertexId> out;
  const auto& g = *tree.group;
  for (VertexId v = 0; v < tree.labels.size(); ++v) {
    const auto& l = tree.labels[v];
    std::int64_t len = g.word_length(l.elem);
    if (l.kind == PointKind::Midpoint) {
      // far end of the subdivided edge
      const auto& f = *tree.factor_templates[l.side];
      len = std::max(len, g.word_length(g.multiply(l.elem, g.embed(l.side, f.generators[l.index]))));
    }
    if (len <= r) out.push_back(v);
  }
  return out;
}

StructuralFinding spike_identification_check(const GroupTree& tree) {
  StructuralFinding f{"spike-identifications"};
  const auto& g = *tree.group;
  const MetricGraph& z = tree.tos.graph();
  auto placed = [&](std::uint8_t side, const SpaceLabel& base, const Element& k) {
    return ZLabel{side, base.kind, base.index, g.multiply(k, g.embed(0, base.elem))};
  };
  Element t;
  if (tree.kind == GroupTree::Kind::Hnn) t = g.embed(1, g.factor(1).generator(0));
  for (VertexId v = 0; v < z.vertex_count() && f.passed; ++v) {
    const auto& l = tree.labels[v];
    if (l.side != 2) continue;
    ++f.checked;
    std::vector<ZLabel> expected;
    if (tree.kind == GroupTree::Kind::Amalgam) {
      expected.push_back(placed(0, tree.basepoints[0], l.elem));
      ZLabel bside{1, tree.basepoints[1].kind, tree.basepoints[1].index,
                   g.multiply(l.elem, g.embed(1, tree.basepoints[1].elem))};
      expected.push_back(bside);
    } else {
      expected.push_back(placed(0, tree.basepoints[1], l.elem));
      expected.push_back(placed(0, tree.basepoints[0], g.multiply(l.elem, t)));
    }
    std::set<VertexId> want;
    for (const auto& e : expected)
      if (auto it = tree.index.find(e); it != tree.index.end()) want.insert(it->second);
    std::set<VertexId> have;
    bool lengths = true;
    for (const auto& inc : z.neighbors(v)) {
      have.insert(inc.neighbor);
      lengths = lengths && z.edge(inc.edge).length == tree.tos.spike_length;
    }
    if (want.empty() || want != have || !lengths || have.size() != z.neighbors(v).size()) {
      f.passed = false;
      f.witness = tree.describe(v);
    }
  }
  return f;
}

StructuralFinding stabilizer_bookkeeping(const GroupTree& tree, int table_radius) {
  StructuralFinding f{"stabilizer-bookkeeping"};
  const auto& g = *tree.group;
  auto table = element_ball(g, standard_generators(g), table_radius);
  // membership in <K_1, K_2>: every syllable fixes its factor's basepoint;
  // in the HNN case K and L are trivial, so only the identity qualifies
  auto expected = [&](const Element& h) {
    if (tree.kind == GroupTree::Kind::Hnn) return g.is_identity(h);
    for (const auto& syl : g.syllables(h)) {
      const auto& t = *tree.factor_templates[syl.factor];
      auto x = t.find(tree.basepoints[syl.factor]);
      if (!x || t.act(syl.local, *x) != x) return false;
    }
    return true;
  };
  std::string computed, wanted;
  for (const auto& h : table) {
    ++f.checked;
    bool fixes = tree.act(h, tree.z) == std::optional<VertexId>(tree.z);
    bool member = expected(h);
    if (fixes) computed += (computed.empty() ? "" : ",") + g.format(h);
    if (member) wanted += (wanted.empty() ? "" : ",") + g.format(h);
    if (fixes != member) f.passed = false;
  }
  f.witness = "G_z ∩ table = {" + computed + "}, expected {" + wanted + "}";
  return f;
}

std::vector<std::vector<VertexId>> group_tree_action(const GroupTree& tree, const std::vector<Element>& elements) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& h : elements) {
    std::vector<VertexId> row(tree.labels.size(), kNoVertex);
    for (VertexId v = 0; v < row.size(); ++v)
      if (auto w = tree.act(h, v)) row[v] = *w;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ccl
