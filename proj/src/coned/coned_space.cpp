#include "ccl/coned/coned_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ccl/coned/spherical.hpp"
#include "ccl/core/error.hpp"

namespace ccl {

const ValidationFinding* ConeValidation::find(const std::string& check) const {
  for (const auto& f : findings)
    if (f.check == check) return &f;
  return nullptr;
}

namespace {

Rational fiber_diameter(const DistanceOracle& x, const std::vector<VertexId>& fiber, VertexId* wa = nullptr,
                        VertexId* wb = nullptr) {
  Rational best(0);
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      Rational d = x.distance(fiber[i], fiber[j]);
      if (d > best) {
        best = d;
        if (wa) *wa = fiber[i];
        if (wb) *wb = fiber[j];
      }
    }
  return best;
}

}  // namespace

ConeValidation validate_cone_spec(const ConeSpec& spec) {
  ConeValidation out;
  const auto& x = *spec.base;
  const auto& g = x.graph();
  auto add = [&](std::string check, bool passed, std::string witness = {}) {
    if (!passed) out.ok = false;
    out.findings.push_back({std::move(check), passed, std::move(witness)});
  };
  auto name = [&](VertexId v) { return g.label(v); };

  // psi injective with vertex image, phi surjective (every label has a fiber)
  std::set<VertexId> used;
  bool injective = true, surjective = true, in_range = true;
  std::string inj_w, sur_w, range_w;
  for (const auto& c : spec.cones) {
    if (c.attachments.empty()) {
      surjective = false;
      sur_w = c.name;
    }
    for (VertexId v : c.attachments) {
      if (v >= g.vertex_count()) {
        in_range = false;
        range_w = c.name + ":" + std::to_string(v);
        continue;
      }
      if (!used.insert(v).second) {
        injective = false;
        inj_w = name(v);
      }
    }
  }
  add("attachment-vertices", in_range, range_w);
  add("attachment-injective", injective, inj_w);
  add("labels-surjective", surjective, sur_w);
  if (!in_range) return out;

  // uniform radius: explicit values must agree; unset values default to the
  // largest fiber diameter plus one
  std::optional<Rational> D;
  bool uniform = true;
  std::string uni_w;
  for (const auto& c : spec.cones) {
    if (!c.D) continue;
    if (c.D->sign() <= 0) {
      uniform = false;
      uni_w = c.name + " has non-positive radius";
    } else if (D && *D != *c.D) {
      uniform = false;
      uni_w = c.name + " radius " + c.D->str() + " differs from " + D->str();
    }
    if (!D) D = c.D;
  }
  if (!D) {
    Rational diam(0);
    for (const auto& c : spec.cones) diam = max(diam, fiber_diameter(x, c.attachments));
    D = diam + Rational(1);
  }
  out.D = *D;
  add("uniform-radial-homogeneity", uniform, uni_w);

  // relative discreteness: on a finite graph the distance between fibers and
  // from a vertex to a fiber is a minimum over finitely many pairs, so it is
  // realized; check each fiber is connected to the rest of its component
  bool discrete = true;
  std::string disc_w;
  for (std::size_t i = 0; i < spec.cones.size(); ++i)
    for (std::size_t j = i + 1; j < spec.cones.size(); ++j) {
      const auto& a = spec.cones[i].attachments;
      const auto& b = spec.cones[j].attachments;
      if (a.empty() || b.empty()) continue;
      std::optional<Rational> best;
      for (VertexId u : a)
        for (VertexId v : b)
          if (x.connected(u, v)) {
            Rational d = x.distance(u, v);
            if (!best || d < *best) best = d;
          }
      if (!best && g.component(a.front()) == g.component(b.front())) {
        discrete = false;
        disc_w = spec.cones[i].name + "/" + spec.cones[j].name;
      }
    }
  add("relative-discreteness", discrete, disc_w);

  // decreasing geodesic distance and the graph-cone strict bound
  bool decreasing = true, strict = true;
  std::string dec_w, strict_w;
  for (const auto& c : spec.cones) {
    std::optional<Rational> sup;
    const auto& f = c.attachments;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (!x.connected(f[i], f[j])) continue;
        Rational d = x.distance(f[i], f[j]);
        bool ok;
        if (c.metric == ConeMetric::Graph) {
          ok = d <= Rational(2) * *D;
        } else {
          ok = d.to_double() <= spherical_cone_distance(D->to_double(), 1.0, 1.0, d.to_double()) + 1e-12;
        }
        if (!ok && decreasing) {
          decreasing = false;
          dec_w = c.name + ": (" + name(f[i]) + ", " + name(f[j]) + ")";
        }
        // witness the pair realizing the sup
        if (c.metric == ConeMetric::Graph && !(d < *D) && (!sup || d > *sup)) {
          sup = d;
          strict = false;
          strict_w = c.name + ": (" + name(f[i]) + ", " + name(f[j]) + ") at distance " + d.str();
        }
      }
  }
  add("decreasing-distance", decreasing, dec_w);
  add("graph-cone-strict-bound", strict, strict_w);
  return out;
}

bool ConedSpace::is_cone_edge(EdgeId e) const {
  const Edge& edge = metric->graph().edge(e);
  return !in_base(edge.u) || !in_base(edge.v);
}

ConedSpace build_coned_space(const ConeSpec& spec) {
  auto report = validate_cone_spec(spec);
  if (!report.ok) {
    std::string why;
    for (const auto& f : report.findings)
      if (!f.passed) why += f.check + " [" + f.witness + "] ";
    throw Error(ErrorCode::InvalidConeSpec, why);
  }
  for (const auto& c : spec.cones)
    if (c.metric != ConeMetric::Graph)
      throw Error(ErrorCode::InvalidConeSpec, "cone " + c.name + " is spherical; use SphericalConedSpace");
  ConedSpace out;
  out.spec = spec;
  out.D = report.D;
  const MetricGraph& x = spec.base->graph();
  GraphBuilder b;
  for (VertexId v = 0; v < x.vertex_count(); ++v) b.add_vertex(x.label(v));
  for (const auto& e : x.edges()) b.add_edge(e.u, e.v, e.length);
  for (const auto& c : spec.cones) {
    VertexId a = b.add_vertex("apex:" + c.name);
    out.apex.push_back(a);
    for (VertexId v : c.attachments) b.add_edge(a, v, report.D);
  }
  out.metric = std::make_shared<const DistanceOracle>(std::make_shared<const MetricGraph>(std::move(b).build()));
  return out;
}

std::size_t cone_crossings(const ConedSpace& space, const GeodesicPath& path) {
  std::size_t runs = 0;
  bool inside = false;
  for (EdgeId e : path.edges) {
    bool cone = space.is_cone_edge(e);
    if (cone && !inside) ++runs;
    // a run ends when the path returns to X through an attachment point
    // and continues along X; passing straight through an apex stays one run
    inside = cone;
  }
  return runs;
}

ExtendedCombing::ExtendedCombing(std::shared_ptr<const ConedSpace> space, std::shared_ptr<const Combing> base_combing)
    : Combing(space->metric), space_(std::move(space)), base_(std::move(base_combing)) {
  if (&base_->graph() != &space_->spec.base->graph())
    throw Error(ErrorCode::CombingDomainMismatch, "base combing is not on the cone spec's base graph");
}

GeodesicPath ExtendedCombing::base_path(VertexId a, VertexId b) const {
  GeodesicPath p = base_->path(a, b);
  if (p.length() != space_->spec.base->distance(a, b) || !p.uniform())
    throw Error(ErrorCode::NotGeodesicInput,
                "base combing path " + std::to_string(a) + " -> " + std::to_string(b) + " is not a geodesic");
  return p;  // X keeps its ids and edge ids inside the coned graph
}

GeodesicPath ExtendedCombing::path(VertexId from, VertexId to) const {
  const auto& sp = *space_;
  const auto& g = graph();
  if (from == to) {
    auto p = GeodesicPath::constant(from);
    p.canonical = true;
    return p;
  }
  if (sp.in_base(from) && sp.in_base(to)) return base_path(from, to);
  const auto& x = *sp.spec.base;
  // candidate entry points: the vertex itself if it is in X, else its fiber
  auto candidates = [&](VertexId v) {
    return sp.in_base(v) ? std::vector<VertexId>{v} : sp.fiber(sp.label_of(v));
  };
  auto up_cost = [&](VertexId v) { return sp.in_base(v) ? Rational(0) : sp.D; };
  std::optional<Rational> best;
  VertexId e1 = kNoVertex, e2 = kNoVertex;
  for (VertexId a : candidates(from))
    for (VertexId b : candidates(to)) {
      if (!x.connected(a, b)) continue;
      Rational len = up_cost(from) + x.distance(a, b) + up_cost(to);
      if (!best || len < *best) {
        best = len;
        e1 = a;
        e2 = b;
      }
    }
  if (!best) throw Error(ErrorCode::DisconnectedPair, std::to_string(from) + " -> " + std::to_string(to));
  GeodesicPath out = GeodesicPath::constant(from);
  if (!sp.in_base(from)) out.append(g, *g.edge_between(from, e1));
  for (EdgeId e : base_path(e1, e2).edges) out.append(g, e);
  if (!sp.in_base(to)) out.append(g, *g.edge_between(e2, to));
  return out;
}

}  // namespace ccl
