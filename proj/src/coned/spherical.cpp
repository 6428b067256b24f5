#include "ccl/coned/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ccl/core/error.hpp"

namespace ccl {

namespace {

constexpr double kPi = std::numbers::pi;
// snapping grid for directions evaluated at irrational arclength
constexpr std::int64_t kSnap = std::int64_t{1} << 36;

Rational snap(double x) { return Rational(std::llround(x * static_cast<double>(kSnap)), kSnap); }

}  // namespace

double spherical_cone_distance(double D, double s, double t, double dX) {
  if (dX >= kPi) return D * (s + t);
  double sq = s * s + t * t - 2.0 * s * t * std::cos(dX);
  return D * std::sqrt(std::max(sq, 0.0));
}

SphericalConedSpace::SphericalConedSpace(ConeSpec spec, std::shared_ptr<const Combing> base_combing)
    : spec_(std::move(spec)), gamma_(std::move(base_combing)) {
  auto report = validate_cone_spec(spec_);
  if (!report.ok) {
    std::string why;
    for (const auto& f : report.findings)
      if (!f.passed) why += f.check + " [" + f.witness + "] ";
    throw Error(ErrorCode::InvalidConeSpec, why);
  }
  for (const auto& c : spec_.cones)
    if (c.metric != ConeMetric::Spherical)
      throw Error(ErrorCode::InvalidConeSpec, "cone " + c.name + " is a graph cone; use build_coned_space");
  if (&gamma_->graph() != &spec_.base->graph())
    throw Error(ErrorCode::CombingDomainMismatch, "base combing is not on the cone spec's base graph");
  D_ = report.D.to_double();
}

double SphericalConedSpace::base_distance(const GraphPoint& a, const GraphPoint& b) const {
  return spec_.base->distance(a, b).to_double();
}

double SphericalConedSpace::cone_distance(std::size_t, const GraphPoint& za, double sa, const GraphPoint& zb,
                                          double sb) const {
  if (sa == 0.0 || sb == 0.0) return D_ * (sa + sb);
  return spherical_cone_distance(D_, sa, sb, base_distance(za, zb));
}

double SphericalConedSpace::distance(const ConePoint& p, const ConePoint& q) const {
  if (!p.label && !q.label) return base_distance(p.z, q.z);
  // exits from a point: itself if in X, else every attachment of its cone
  auto exits = [&](const ConePoint& x) {
    std::vector<std::pair<GraphPoint, double>> out;
    if (!x.label) {
      out.emplace_back(x.z, 0.0);
      return out;
    }
    for (VertexId e : spec_.cones[*x.label].attachments) {
      auto pe = GraphPoint::at_vertex(e);
      out.emplace_back(pe, cone_distance(*x.label, x.z, x.s, pe, 1.0));
    }
    return out;
  };
  double best = std::numeric_limits<double>::infinity();
  if (p.label && q.label && *p.label == *q.label) best = cone_distance(*p.label, p.z, p.s, q.z, q.s);
  for (const auto& [a, ca] : exits(p))
    for (const auto& [b, cb] : exits(q)) {
      if (!spec_.base->connected(a.is_vertex() ? a.vertex() : spec_.base->graph().edge(a.edge()).u,
                                 b.is_vertex() ? b.vertex() : spec_.base->graph().edge(b.edge()).u))
        continue;
      best = std::min(best, ca + base_distance(a, b) + cb);
    }
  if (!std::isfinite(best)) throw Error(ErrorCode::DisconnectedPair, "spherical coned space");
  return best;
}

SphericalGeodesic SphericalConedSpace::geodesic(const ConePoint& p, const ConePoint& q) const {
  for (const ConePoint* x : {&p, &q})
    if (!x->z.is_vertex())
      throw Error(ErrorCode::ParameterOutOfRange, "geodesic endpoints need vertex directions");
  const auto& x = *spec_.base;
  auto cone_piece = [&](std::size_t label, VertexId za, double sa, VertexId zb, double sb) {
    SphericalGeodesic::Piece piece;
    piece.cone = true;
    piece.label = label;
    piece.za = za;
    piece.zb = zb;
    piece.sa = sa;
    piece.sb = sb;
    piece.dX = x.distance(za, zb).to_double();
    piece.theta = std::min(piece.dX, kPi);
    if (za != zb && piece.dX < kPi) piece.base = gamma_->path(za, zb);
    piece.length = cone_distance(label, GraphPoint::at_vertex(za), sa, GraphPoint::at_vertex(zb), sb);
    return piece;
  };
  auto base_piece = [&](VertexId a, VertexId b) {
    SphericalGeodesic::Piece piece;
    piece.base = gamma_->path(a, b);
    piece.length = piece.base.length().to_double();
    return piece;
  };

  SphericalGeodesic out;
  out.space_ = this;
  std::vector<VertexId> entries = p.label ? spec_.cones[*p.label].attachments : std::vector<VertexId>{p.z.vertex()};
  std::vector<VertexId> leaves = q.label ? spec_.cones[*q.label].attachments : std::vector<VertexId>{q.z.vertex()};
  double best = std::numeric_limits<double>::infinity();
  VertexId e1 = kNoVertex, e2 = kNoVertex;
  for (VertexId a : entries)
    for (VertexId b : leaves) {
      if (!x.connected(a, b)) continue;
      double len = (p.label ? cone_distance(*p.label, p.z, p.s, GraphPoint::at_vertex(a), 1.0) : 0.0) +
                   x.distance(a, b).to_double() +
                   (q.label ? cone_distance(*q.label, GraphPoint::at_vertex(b), 1.0, q.z, q.s) : 0.0);
      if (len < best) {
        best = len;
        e1 = a;
        e2 = b;
      }
    }
  // same cone: the direct sector segment wins ties
  if (p.label && q.label && *p.label == *q.label) {
    auto direct = cone_piece(*p.label, p.z.vertex(), p.s, q.z.vertex(), q.s);
    if (direct.length <= best) {
      out.total_ = direct.length;
      out.pieces_.push_back(std::move(direct));
      return out;
    }
  }
  if (e1 == kNoVertex) throw Error(ErrorCode::DisconnectedPair, "spherical coned space");
  if (p.label) out.pieces_.push_back(cone_piece(*p.label, p.z.vertex(), p.s, e1, 1.0));
  if (e1 != e2 || out.pieces_.empty()) out.pieces_.push_back(base_piece(e1, e2));
  if (q.label) out.pieces_.push_back(cone_piece(*q.label, e2, 1.0, q.z.vertex(), q.s));
  for (const auto& piece : out.pieces_) out.total_ += piece.length;
  return out;
}

ConePoint SphericalGeodesic::eval_piece(const Piece& piece, double u) const {
  const auto& g = space_->spec_.base->graph();
  if (!piece.cone) {
    Rational s = snap(u * piece.length);
    s = std::clamp(s, Rational(0), piece.base.length());
    return ConePoint::base(point_at_arclength(g, piece.base, s));
  }
  // planar development: a at angle 0, b at angle theta
  double D = space_->D();
  double ax = D * piece.sa, ay = 0.0;
  double bx = D * piece.sb * std::cos(piece.theta), by = D * piece.sb * std::sin(piece.theta);
  if (piece.dX >= kPi) bx = -D * piece.sb, by = 0.0;
  double px = ax + u * (bx - ax), py = ay + u * (by - ay);
  double rho = std::hypot(px, py) / D;
  if (rho <= 1e-15) return ConePoint::apex(piece.label, piece.za);
  GraphPoint z = GraphPoint::at_vertex(piece.za);
  if (piece.dX >= kPi) {
    if (px < 0) z = GraphPoint::at_vertex(piece.zb);
  } else if (piece.za != piece.zb) {
    double phi = std::clamp(std::atan2(py, px), 0.0, piece.theta);
    Rational s = std::clamp(snap(phi), Rational(0), piece.base.length());
    z = point_at_arclength(g, piece.base, s);
  }
  // attachment level at an attachment vertex is the glued X point
  if (std::abs(rho - 1.0) <= 1e-15 && z.is_vertex()) {
    for (VertexId e : space_->spec_.cones[piece.label].attachments)
      if (e == z.vertex()) return ConePoint::base(z);
  }
  return ConePoint::in_cone(piece.label, z, std::min(rho, 1.0));
}

ConePoint SphericalGeodesic::eval(double t) const {
  if (t < 0.0 || t > 1.0) throw Error(ErrorCode::ParameterOutOfRange, "t outside [0,1]");
  double target = t * total_;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& piece = pieces_[i];
    if (target <= piece.length || i + 1 == pieces_.size()) {
      double u = piece.length > 0 ? std::clamp(target / piece.length, 0.0, 1.0) : 0.0;
      return eval_piece(piece, u);
    }
    target -= piece.length;
  }
  return eval_piece(pieces_.back(), 1.0);
}

std::vector<double> SphericalGeodesic::breakpoints() const {
  std::vector<double> out{0.0};
  double acc = 0.0;
  for (const auto& piece : pieces_) {
    acc += piece.length;
    out.push_back(total_ > 0 ? acc / total_ : 1.0);
  }
  out.back() = 1.0;
  return out;
}

}  // namespace ccl
