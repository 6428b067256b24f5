#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccl/graph/combing.hpp"

namespace ccl {

enum class ConeMetric { Graph, Spherical };

struct ConeLabel {
  std::string name;
  ConeMetric metric = ConeMetric::Graph;
  std::optional<Rational> D;           // unset: fiber diameter + 1
  std::vector<VertexId> attachments;   // psi(phi^-1(label)) as base vertices
};

struct ConeSpec {
  std::shared_ptr<const DistanceOracle> base;
  std::vector<ConeLabel> cones;
};

struct ValidationFinding {
  std::string check;
  bool passed = true;
  std::string witness;
};

struct ConeValidation {
  bool ok = true;
  Rational D;  // the common cone radius
  std::vector<ValidationFinding> findings;
  const ValidationFinding* find(const std::string& check) const;
};

ConeValidation validate_cone_spec(const ConeSpec& spec);

// Graph-cone realization: X keeps its vertex ids 0..n-1, one apex per label
// is appended and joined to each attachment point by an edge of length D.
class ConedSpace {
 public:
  ConeSpec spec;
  Rational D;
  std::shared_ptr<const DistanceOracle> metric;
  std::vector<VertexId> apex;  // per label

  std::size_t base_count() const { return spec.base->graph().vertex_count(); }
  bool in_base(VertexId v) const { return v < base_count(); }
  // label index of an apex vertex
  std::size_t label_of(VertexId apex_vertex) const { return apex_vertex - base_count(); }
  const std::vector<VertexId>& fiber(std::size_t label) const { return spec.cones[label].attachments; }
  bool is_cone_edge(EdgeId e) const;
};

ConedSpace build_coned_space(const ConeSpec& spec);

// Maximal runs of cone edges along a path.
std::size_t cone_crossings(const ConedSpace& space, const GeodesicPath& path);

// The extension of a geodesic combing of X to the coned space: cone segment,
// then the X-combing between the chosen attachment points, then a cone
// segment. Attachment points minimize total length, ties broken by the
// smaller (entry, exit) vertex ids.
class ExtendedCombing : public Combing {
 public:
  ExtendedCombing(std::shared_ptr<const ConedSpace> space, std::shared_ptr<const Combing> base_combing);
  GeodesicPath path(VertexId from, VertexId to) const override;
  std::string name() const override { return "extended(" + base_->name() + ")"; }
  const ConedSpace& space() const { return *space_; }

 private:
  GeodesicPath base_path(VertexId a, VertexId b) const;
  std::shared_ptr<const ConedSpace> space_;
  std::shared_ptr<const Combing> base_;
};

}  // namespace ccl
