#include "ccl/tos/combined.hpp"

#include <algorithm>

#include "ccl/core/error.hpp"

namespace ccl {

VertexSpaceFamily::VertexSpaceFamily(std::shared_ptr<const TreeOfSpaces> tos, FamilyMode mode,
                                     const Factory& factory, std::string name)
    : tos_(std::move(tos)), name_(std::move(name)) {
  const MetricGraph& z = tos_->graph();
  for (std::size_t k = 0; k < tos_->k_count(); ++k) {
    Local loc;
    loc.to_z = tos_->vertex_space[k];
    if (mode == FamilyMode::Independent) std::sort(loc.to_z.begin(), loc.to_z.end());
    GraphBuilder b;
    for (std::size_t i = 0; i < loc.to_z.size(); ++i) {
      b.add_vertex(z.label(loc.to_z[i]));
      loc.from_z.emplace(loc.to_z[i], static_cast<VertexId>(i));
    }
    for (std::size_t i = 0; i < loc.to_z.size(); ++i)
      for (const auto& inc : z.neighbors(loc.to_z[i])) {
        auto it = loc.from_z.find(inc.neighbor);
        if (it == loc.from_z.end() || it->second <= i) continue;
        b.add_edge(static_cast<VertexId>(i), it->second, z.edge(inc.edge).length);
        loc.edge_to_z.push_back(inc.edge);
      }
    auto metric = make_metric(std::move(b).build());
    loc.combing = factory(k, metric);
    if (&loc.combing->graph() != &metric->graph())
      throw Error(ErrorCode::CombingDomainMismatch, "vertex-space combing built on another graph");
    locals_.push_back(std::move(loc));
  }
}

GeodesicPath VertexSpaceFamily::path(std::size_t k, VertexId u, VertexId v) const {
  const Local& loc = locals_.at(k);
  auto iu = loc.from_z.find(u), iv = loc.from_z.find(v);
  if (iu == loc.from_z.end() || iv == loc.from_z.end())
    throw Error(ErrorCode::CombingDomainMismatch, "point outside X_" + std::to_string(k));
  GeodesicPath lp = loc.combing->path(iu->second, iv->second);
  GeodesicPath out = GeodesicPath::constant(u);
  for (EdgeId e : lp.edges) out.append(tos_->graph(), loc.edge_to_z[e]);
  out.knots = lp.knots;
  out.canonical = lp.canonical;
  return out;
}

Rational VertexSpaceFamily::distance(std::size_t k, VertexId u, VertexId v) const {
  const Local& loc = locals_.at(k);
  return loc.combing->metric().distance(loc.from_z.at(u), loc.from_z.at(v));
}

std::shared_ptr<const VertexSpaceFamily> canonical_family(std::shared_ptr<const TreeOfSpaces> tos, FamilyMode mode) {
  return std::make_shared<const VertexSpaceFamily>(
      std::move(tos), mode,
      [](std::size_t, std::shared_ptr<const DistanceOracle> m) { return std::make_shared<const CanonicalCombing>(m); },
      mode == FamilyMode::Transported ? "canonical-transported" : "canonical-independent");
}

CombinedCombing::CombinedCombing(std::shared_ptr<const TreeOfSpaces> tos, std::shared_ptr<const VertexSpaceFamily> family)
    : Combing(tos->z), tos_(std::move(tos)), family_(std::move(family)) {
  if (&family_->tos().graph() != &tos_->graph())
    throw Error(ErrorCode::CombingDomainMismatch, "family built on another tree of spaces");
}

std::pair<std::vector<VertexId>, std::vector<std::size_t>> CombinedCombing::route(VertexId from, VertexId to) const {
  std::vector<VertexId> points{from};
  auto tp = tos_->t_path(tos_->xi[from], tos_->xi[to]);
  for (std::size_t i = 1; i + 1 < tp.size(); ++i)
    if (!tos_->is_k[tp[i]]) points.push_back(tos_->glue_point[tp[i]]);
  points.push_back(to);
  std::vector<std::size_t> spaces;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) spaces.push_back(tos_->common_space(points[i], points[i + 1]));
  return {points, spaces};
}

GeodesicPath CombinedCombing::path(VertexId from, VertexId to) const {
  if (from == to) {
    auto p = GeodesicPath::constant(from);
    p.canonical = true;
    return p;
  }
  auto [points, spaces] = route(from, to);
  std::vector<GeodesicPath> pieces;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i] == points[i + 1]) continue;
    pieces.push_back(family_->path(spaces[i], points[i], points[i + 1]));
    weights.push_back(family_->distance(spaces[i], points[i], points[i + 1]));
  }
  if (pieces.size() == 1) return pieces.front();
  return concatenate(graph(), pieces, weights);
}

namespace {

// g·P as a vertex sequence, empty if some vertex leaves the truncation
std::vector<VertexId> image(const std::vector<VertexId>& row, const GeodesicPath& p) {
  std::vector<VertexId> out;
  for (VertexId v : p.vertices) {
    if (row[v] == kNoVertex) return {};
    out.push_back(row[v]);
  }
  return out;
}

bool same_parametrization(const GeodesicPath& a, const GeodesicPath& b) {
  if (a.cumulative != b.cumulative) return false;
  auto ba = a.breakpoints(), bb = b.breakpoints();
  return ba == bb;
}

}  // namespace

EquivarianceReport combing_equivariance(const Combing& combing, const std::vector<std::string>& names,
                                        const std::vector<std::vector<VertexId>>& action,
                                        const std::vector<VertexId>& points) {
  EquivarianceReport out;
  std::vector<VertexId> pts = points;
  if (pts.empty())
    for (VertexId v = 0; v < combing.graph().vertex_count(); ++v) pts.push_back(v);
  for (std::size_t i = 0; i < action.size(); ++i) {
    const auto& row = action[i];
    for (VertexId u : pts)
      for (VertexId v : pts) {
        if (row[u] == kNoVertex || row[v] == kNoVertex) {
          ++out.skipped;
          continue;
        }
        GeodesicPath p = combing.path(u, v);
        auto moved = image(row, p);
        if (moved.empty()) {
          ++out.skipped;
          continue;
        }
        ++out.checked;
        GeodesicPath q = combing.path(row[u], row[v]);
        if (moved != q.vertices || !same_parametrization(p, q)) {
          if (out.violations++ == 0)
            out.witness = "g=" + names[i] + " (" + combing.graph().label(u) + ", " + combing.graph().label(v) + ")";
          out.ok = false;
        }
      }
  }
  return out;
}

EquivarianceReport family_equivariance(const VertexSpaceFamily& family, const std::vector<std::string>& names,
                                       const std::vector<std::vector<VertexId>>& action) {
  EquivarianceReport out;
  const auto& tos = family.tos();
  for (std::size_t i = 0; i < action.size(); ++i) {
    const auto& row = action[i];
    for (std::size_t k = 0; k < tos.k_count(); ++k) {
      // h·k from any point of the copy itself
      std::size_t hk = SIZE_MAX;
      for (VertexId v : tos.vertex_space[k])
        if (tos.xi[v] == tos.k_vertices[k] && row[v] != kNoVertex) {
          hk = tos.k_index_of[tos.xi[row[v]]];
          break;
        }
      const auto& space = tos.vertex_space[k];
      for (VertexId x : space)
        for (VertexId y : space) {
          if (hk == SIZE_MAX || row[x] == kNoVertex || row[y] == kNoVertex || !tos.in_vertex_space(hk, row[x]) ||
              !tos.in_vertex_space(hk, row[y])) {
            ++out.skipped;
            continue;
          }
          GeodesicPath p = family.path(k, x, y);
          auto moved = image(row, p);
          bool inside = !moved.empty();
          for (VertexId w : moved) inside = inside && tos.in_vertex_space(hk, w);
          if (!inside) {
            ++out.skipped;
            continue;
          }
          ++out.checked;
          GeodesicPath q = family.path(hk, row[x], row[y]);
          if (moved != q.vertices || !same_parametrization(p, q)) {
            if (out.violations++ == 0)
              out.witness = "h=" + names[i] + " k=" + tos.tree->label(tos.k_vertices[k]) + " (" +
                            tos.graph().label(x) + ", " + tos.graph().label(y) + ")";
            out.ok = false;
          }
        }
    }
  }
  return out;
}

}  // namespace ccl
