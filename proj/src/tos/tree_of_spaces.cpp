#include "ccl/tos/tree_of_spaces.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ccl/core/error.hpp"
#include "ccl/graph/combing.hpp"
#include "ccl/graph/graph_io.hpp"

namespace ccl {

namespace {

void finalize(TreeOfSpaces& tos) {
  const MetricGraph& t = *tos.tree;
  std::size_t n = t.vertex_count();
  tos.glue_point.assign(n, kNoVertex);
  tos.k_index_of.assign(n, SIZE_MAX);
  tos.k_vertices.clear();
  for (VertexId v = 0; v < n; ++v)
    if (tos.is_k[v]) {
      tos.k_index_of[v] = tos.k_vertices.size();
      tos.k_vertices.push_back(v);
    }
  for (VertexId v = 0; v < tos.xi.size(); ++v)
    if (!tos.is_k[tos.xi[v]] && tos.glue_point[tos.xi[v]] == kNoVertex) tos.glue_point[tos.xi[v]] = v;
  // BFS forest; each component is rooted at its least vertex
  tos.parent.assign(n, kNoVertex);
  tos.depth.assign(n, 0);
  std::vector<char> seen(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const auto& inc : t.neighbors(u)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        tos.parent[inc.neighbor] = u;
        tos.depth[inc.neighbor] = tos.depth[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
}

}  // namespace

std::vector<VertexId> TreeOfSpaces::t_path(VertexId a, VertexId b) const {
  if (tree->component(a) != tree->component(b))
    throw Error(ErrorCode::DisconnectedPair, "T vertices " + std::to_string(a) + " and " + std::to_string(b));
  std::vector<VertexId> front, back;
  while (depth[a] > depth[b]) front.push_back(a), a = parent[a];
  while (depth[b] > depth[a]) back.push_back(b), b = parent[b];
  while (a != b) {
    front.push_back(a), a = parent[a];
    back.push_back(b), b = parent[b];
  }
  front.push_back(a);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

bool TreeOfSpaces::in_vertex_space(std::size_t k, VertexId v) const {
  VertexId kt = k_vertices[k];
  VertexId tv = xi[v];
  if (tv == kt) return true;
  return !is_k[tv] && tree->edge_between(tv, kt).has_value();
}

std::size_t TreeOfSpaces::common_space(VertexId u, VertexId v) const {
  auto path = t_path(xi[u], xi[v]);
  for (VertexId t : path)
    if (is_k[t]) return k_index_of[t];
  for (const auto& inc : tree->neighbors(path.front()))
    if (is_k[inc.neighbor]) return k_index_of[inc.neighbor];
  throw Error(ErrorCode::BuildError, "gluing point without a vertex space");
}

TreeOfSpaces glue_tree_of_spaces(const std::vector<SpaceCopy>& copies, const std::vector<GluePointSpec>& glue,
                                 Rational spike_length) {
  if (spike_length.sign() <= 0) throw Error(ErrorCode::ParameterOutOfRange, "spike length must be positive");
  TreeOfSpaces tos;
  tos.spike_length = spike_length;
  GraphBuilder zb, tb;
  std::vector<VertexId> offset;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    const auto& g = *copies[c].graph;
    offset.push_back(static_cast<VertexId>(zb.vertex_count()));
    VertexId tk = tb.add_vertex(copies[c].name);
    tos.is_k.push_back(1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      zb.add_vertex(copies[c].name + ":" + g.label(v));
      tos.xi.push_back(tk);
    }
    for (const auto& e : g.edges()) zb.add_edge(offset[c] + e.u, offset[c] + e.v, e.length);
  }
  // per copy: (local attachment vertex, glue index, Z tip)
  std::vector<std::vector<std::tuple<VertexId, std::size_t, VertexId>>> tips(copies.size());
  for (std::size_t i = 0; i < glue.size(); ++i) {
    VertexId tl = tb.add_vertex(glue[i].name);
    tos.is_k.push_back(0);
    VertexId tip = zb.add_vertex(glue[i].name);
    tos.xi.push_back(tl);
    for (const auto& a : glue[i].attachments) {
      if (a.copy >= copies.size() || a.vertex >= copies[a.copy].graph->vertex_count())
        throw Error(ErrorCode::BuildError, "attachment of " + glue[i].name + " out of range");
      zb.add_edge(tip, offset[a.copy] + a.vertex, spike_length);
      tb.add_edge(static_cast<VertexId>(a.copy), tl, Rational(1));
      tips[a.copy].emplace_back(a.vertex, i, tip);
    }
  }
  for (std::size_t c = 0; c < copies.size(); ++c) {
    std::vector<VertexId> space;
    for (VertexId v = 0; v < copies[c].graph->vertex_count(); ++v) space.push_back(offset[c] + v);
    std::sort(tips[c].begin(), tips[c].end());
    for (const auto& [local, gi, tip] : tips[c])
      if (std::find(space.begin(), space.end(), tip) == space.end()) space.push_back(tip);
    tos.vertex_space.push_back(std::move(space));
  }
  tos.z = make_metric(std::move(zb).build());
  tos.tree = std::make_shared<const MetricGraph>(std::move(tb).build());
  finalize(tos);
  return tos;
}

const StructuralFinding* StructuralReport::find(const std::string& check) const {
  for (const auto& f : findings)
    if (f.check == check) return &f;
  return nullptr;
}

StructuralReport structural_suite(const TreeOfSpaces& tos, const std::vector<VertexId>& core) {
  StructuralReport out;
  const MetricGraph& z = tos.graph();
  const MetricGraph& t = *tos.tree;
  auto add = [&](StructuralFinding f) {
    if (!f.passed) out.ok = false;
    out.findings.push_back(std::move(f));
  };

  StructuralFinding defined{"xi-defined"};
  for (VertexId v = 0; v < z.vertex_count() && defined.passed; ++v, ++defined.checked)
    if (v >= tos.xi.size() || tos.xi[v] >= t.vertex_count()) {
      defined.passed = false;
      defined.witness = z.label(v);
    }
  for (const auto& e : z.edges()) {
    if (!defined.passed) break;
    ++defined.checked;
    VertexId a = tos.xi[e.u], b = tos.xi[e.v];
    if (a != b && !t.edge_between(a, b)) {
      defined.passed = false;
      defined.witness = "edge " + z.label(e.u) + " -- " + z.label(e.v);
    }
  }
  add(defined);
  if (!defined.passed) return out;

  StructuralFinding single{"xi-singletons"};
  std::vector<std::size_t> fiber(t.vertex_count(), 0);
  for (VertexId v = 0; v < z.vertex_count(); ++v) ++fiber[tos.xi[v]];
  for (VertexId l = 0; l < t.vertex_count(); ++l) {
    if (tos.is_k[l]) continue;
    ++single.checked;
    if (fiber[l] != 1 && single.passed) {
      single.passed = false;
      single.witness = t.label(l) + " has " + std::to_string(fiber[l]) + " preimages";
    }
  }
  add(single);

  StructuralFinding acyclic{"tree-acyclic"};
  acyclic.checked = t.edge_count();
  if (t.component_count() != 1 || t.edge_count() + 1 != t.vertex_count()) {
    acyclic.passed = false;
    acyclic.witness = std::to_string(t.vertex_count()) + " vertices, " + std::to_string(t.edge_count()) + " edges, " +
                      std::to_string(t.component_count()) + " components";
  }
  add(acyclic);

  StructuralFinding bip{"tree-bipartite"};
  for (const auto& e : t.edges()) {
    ++bip.checked;
    if (tos.is_k[e.u] == tos.is_k[e.v] && bip.passed) {
      bip.passed = false;
      bip.witness = t.label(e.u) + " -- " + t.label(e.v);
    }
  }
  add(bip);

  std::vector<char> in_core(z.vertex_count(), core.empty() ? 1 : 0);
  for (VertexId v : core) in_core[v] = 1;
  StructuralFinding convex{"vertex-space-convexity"};
  std::vector<char> member(z.vertex_count(), 0);
  for (std::size_t k = 0; k < tos.k_count() && convex.passed; ++k) {
    const auto& space = tos.vertex_space[k];
    for (VertexId v : space) member[v] = 1;
    // membership must match xi^-1(star(k))
    std::size_t expected = 0;
    for (VertexId v = 0; v < z.vertex_count(); ++v) expected += tos.in_vertex_space(k, v);
    bool same = expected == space.size();
    for (VertexId v : space) same = same && tos.in_vertex_space(k, v);
    if (!same) {
      convex.passed = false;
      convex.witness = "X_" + t.label(tos.k_vertices[k]) + " differs from the preimage of its star";
    }
    // intrinsic metric of the induced subgraph
    GraphBuilder lb;
    std::vector<VertexId> local(z.vertex_count(), kNoVertex);
    for (VertexId v : space) local[v] = lb.add_vertex();
    std::set<VertexId> boundary;
    for (VertexId v : space)
      for (const auto& inc : z.neighbors(v)) {
        if (member[inc.neighbor]) {
          if (v < inc.neighbor) lb.add_edge(local[v], local[inc.neighbor], z.edge(inc.edge).length);
        } else {
          boundary.insert(inc.neighbor);
        }
      }
    DistanceOracle intrinsic(std::make_shared<const MetricGraph>(std::move(lb).build()));
    for (std::size_t i = 0; i < space.size() && convex.passed; ++i) {
      VertexId u = space[i];
      if (!in_core[u]) continue;
      const auto& ru = tos.z->row(u);
      for (std::size_t j = i + 1; j < space.size() && convex.passed; ++j) {
        VertexId v = space[j];
        if (!in_core[v]) continue;
        ++convex.checked;
        const auto& rv = tos.z->row(v);
        bool ok = intrinsic.connected(local[u], local[v]) &&
                  intrinsic.distance(local[u], local[v]) == tos.z->distance(u, v);
        // any geodesic leaving X_k passes through a boundary vertex
        for (VertexId w : boundary)
          if (ok && ru[w] != DistanceOracle::kUnreachable && ru[w] + rv[w] == ru[v]) ok = false;
        if (!ok) {
          convex.passed = false;
          convex.witness = "X_" + t.label(tos.k_vertices[k]) + ": " + z.label(u) + " -> " + z.label(v);
        }
      }
    }
    for (VertexId v : space) member[v] = 0;
  }
  add(convex);
  return out;
}

void write_tree_of_spaces(std::ostream& os, const TreeOfSpaces& tos) {
  write_graph(os, tos.graph());
  const MetricGraph& t = *tos.tree;
  os << "spike " << tos.spike_length.str() << '\n';
  os << "tree " << t.vertex_count() << '\n';
  for (const auto& e : t.edges()) os << "tedge " << e.u << ' ' << e.v << '\n';
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    os << "tkind " << v << ' ' << (tos.is_k[v] ? 'K' : 'L') << "\ntlabel " << v << ' ' << t.label(v) << '\n';
  for (VertexId v = 0; v < tos.xi.size(); ++v) os << "xi " << v << ' ' << tos.xi[v] << '\n';
  for (std::size_t k = 0; k < tos.k_count(); ++k) {
    os << "vspace " << tos.k_vertices[k];
    for (VertexId v : tos.vertex_space[k]) os << ' ' << v;
    os << '\n';
  }
}

std::string tree_of_spaces_to_string(const TreeOfSpaces& tos) {
  std::ostringstream os;
  write_tree_of_spaces(os, tos);
  return os.str();
}

TreeOfSpaces tree_of_spaces_from_string(const std::string& text) {
  std::vector<std::string> extra;
  TreeOfSpaces tos;
  tos.z = make_metric(graph_from_string(text, &extra));
  GraphBuilder tb;
  std::map<VertexId, std::vector<VertexId>> spaces;
  tos.xi.assign(tos.graph().vertex_count(), kNoVertex);
  auto fail = [](const std::string& line) { throw Error(ErrorCode::FormatError, "bad line: " + line); };
  bool have_tree = false;
  for (const auto& line : extra) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "spike") {
      std::string len;
      if (!(ls >> len)) fail(line);
      tos.spike_length = Rational::parse(len);
    } else if (kw == "tree") {
      std::size_t n;
      if (have_tree || !(ls >> n)) fail(line);
      for (std::size_t i = 0; i < n; ++i) tb.add_vertex();
      tos.is_k.assign(n, 0);
      have_tree = true;
    } else if (kw == "tedge") {
      VertexId a, b;
      if (!have_tree || !(ls >> a >> b)) fail(line);
      tb.add_edge(a, b, Rational(1));
    } else if (kw == "tkind") {
      VertexId v;
      char kind;
      if (!have_tree || !(ls >> v >> kind) || v >= tos.is_k.size() || (kind != 'K' && kind != 'L')) fail(line);
      tos.is_k[v] = kind == 'K';
    } else if (kw == "tlabel") {
      VertexId v;
      std::string rest;
      if (!have_tree || !(ls >> v) || v >= tos.is_k.size()) fail(line);
      std::getline(ls >> std::ws, rest);
      tb.set_label(v, rest);
    } else if (kw == "xi") {
      VertexId v, t;
      if (!(ls >> v >> t) || v >= tos.xi.size() || t >= tos.is_k.size()) fail(line);
      tos.xi[v] = t;
    } else if (kw == "vspace") {
      VertexId k, v;
      if (!(ls >> k)) fail(line);
      auto& list = spaces[k];
      while (ls >> v) list.push_back(v);
    } else {
      fail(line);
    }
  }
  if (!have_tree) throw Error(ErrorCode::FormatError, "missing tree section");
  for (VertexId v : tos.xi)
    if (v == kNoVertex) throw Error(ErrorCode::FormatError, "xi undefined on some vertex");
  tos.tree = std::make_shared<const MetricGraph>(std::move(tb).build());
  finalize(tos);
  for (VertexId k : tos.k_vertices) tos.vertex_space.push_back(spaces[k]);
  return tos;
}

}  // namespace ccl
