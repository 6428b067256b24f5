#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ccl/coned/coned_space.hpp"

namespace ccl {

// d_l((x,s),(y,t)) for a spherical cone of radius D, with s,t in [0,1]
// measured from the apex (s = 1 is the attachment level). Angles at or
// beyond pi collapse to the through-apex sum D(s+t).
double spherical_cone_distance(double D, double s, double t, double dX);

// A point of a spherically coned space. Without a label it is a point of X.
// With a label it is (z, s) in that cone: z a point of X giving the direction,
// s the radial coordinate; s = 0 is the apex.
struct ConePoint {
  std::optional<std::size_t> label;
  GraphPoint z = GraphPoint::at_vertex(0);
  double s = 1.0;

  static ConePoint base(GraphPoint p) { return {std::nullopt, p, 1.0}; }
  static ConePoint in_cone(std::size_t label, GraphPoint z, double s) { return {label, z, s}; }
  static ConePoint apex(std::size_t label, VertexId any_attachment) {
    return {label, GraphPoint::at_vertex(any_attachment), 0.0};
  }
  bool is_apex() const { return label && s == 0.0; }
};

class SphericalGeodesic;

// Cones realized by the cos formula, with the induced length metric computed
// by routing between cones through attachment points. Distances are doubles.
class SphericalConedSpace {
 public:
  SphericalConedSpace(ConeSpec spec, std::shared_ptr<const Combing> base_combing);

  const ConeSpec& spec() const { return spec_; }
  double D() const { return D_; }
  double base_distance(const GraphPoint& a, const GraphPoint& b) const;
  // distance inside one cone, ignoring routes through X
  double cone_distance(std::size_t label, const GraphPoint& za, double sa, const GraphPoint& zb, double sb) const;
  double distance(const ConePoint& p, const ConePoint& q) const;
  // endpoints must have vertex directions / be X vertices
  SphericalGeodesic geodesic(const ConePoint& p, const ConePoint& q) const;

 private:
  friend class SphericalGeodesic;
  ConeSpec spec_;
  double D_ = 1.0;
  std::shared_ptr<const Combing> gamma_;
};

class SphericalGeodesic {
 public:
  double length() const { return total_; }
  ConePoint eval(double t) const;  // t in [0,1]
  // parameters where the geodesic enters or leaves X
  std::vector<double> breakpoints() const;

 private:
  friend class SphericalConedSpace;
  struct Piece {
    bool cone = false;
    std::size_t label = 0;
    VertexId za = 0, zb = 0;  // directions at the two ends
    double sa = 0, sb = 0, theta = 0, dX = 0;
    GeodesicPath base;  // X-piece, or the X-geodesic za -> zb spanning the sector
    double length = 0;
  };
  ConePoint eval_piece(const Piece& piece, double u) const;
  const SphericalConedSpace* space_ = nullptr;
  std::vector<Piece> pieces_;
  double total_ = 0;
};

}  // namespace ccl
