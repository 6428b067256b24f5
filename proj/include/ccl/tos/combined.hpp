#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccl/graph/combing.hpp"
#include "ccl/tos/tree_of_spaces.hpp"

namespace ccl {

// Local vertex order used when building each X_k as a standalone graph.
// Transported: the stored template order, shared by all copies of one
// template, so tie-breaks move with the action. Independent: Z id order.
enum class FamilyMode { Transported, Independent };

// One combing per vertex space, each on its own copy of X_k.
class VertexSpaceFamily {
 public:
  using Factory = std::function<std::shared_ptr<const Combing>(std::size_t k, std::shared_ptr<const DistanceOracle>)>;

  struct Local {
    std::shared_ptr<const Combing> combing;
    std::vector<VertexId> to_z;
    std::vector<EdgeId> edge_to_z;
    std::unordered_map<VertexId, VertexId> from_z;
  };

  VertexSpaceFamily(std::shared_ptr<const TreeOfSpaces> tos, FamilyMode mode, const Factory& factory,
                    std::string name);

  // Gamma_k(u, v) in Z ids
  GeodesicPath path(std::size_t k, VertexId u, VertexId v) const;
  // intrinsic distance in X_k
  Rational distance(std::size_t k, VertexId u, VertexId v) const;
  const Local& local(std::size_t k) const { return locals_[k]; }
  const TreeOfSpaces& tos() const { return *tos_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const TreeOfSpaces> tos_;
  std::vector<Local> locals_;
  std::string name_;
};

// canonical geodesics inside each X_k
std::shared_ptr<const VertexSpaceFamily> canonical_family(std::shared_ptr<const TreeOfSpaces> tos, FamilyMode mode);

// Gamma(v, w): follow the T geodesic from xi(v) to xi(w), pass through the
// gluing points of its L vertices, and concatenate the vertex-space paths
// with parameter intervals proportional to their intrinsic lengths.
class CombinedCombing : public Combing {
 public:
  CombinedCombing(std::shared_ptr<const TreeOfSpaces> tos, std::shared_ptr<const VertexSpaceFamily> family);
  GeodesicPath path(VertexId from, VertexId to) const override;
  std::string name() const override { return "combined(" + family_->name() + ")"; }
  // the points v_0 .. v_{m+1} and the spaces k_0 .. k_m used for a pair
  std::pair<std::vector<VertexId>, std::vector<std::size_t>> route(VertexId from, VertexId to) const;

 private:
  std::shared_ptr<const TreeOfSpaces> tos_;
  std::shared_ptr<const VertexSpaceFamily> family_;
};

struct EquivarianceReport {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // some image fell off the truncation
  std::size_t violations = 0;
  std::string witness;
};

// g·gamma(u,v) = gamma(gu,gv) as parametrized paths, for every tabled g and
// every pair drawn from `points` (all vertices if empty).
// action[i][v] = names[i] · v, kNoVertex off the truncation.
EquivarianceReport combing_equivariance(const Combing& combing, const std::vector<std::string>& names,
                                        const std::vector<std::vector<VertexId>>& action,
                                        const std::vector<VertexId>& points = {});

// h·Gamma_k(x,y) = Gamma_{hk}(hx,hy) over tabled h, every k and x,y in X_k
EquivarianceReport family_equivariance(const VertexSpaceFamily& family, const std::vector<std::string>& names,
                                       const std::vector<std::vector<VertexId>>& action);

}  // namespace ccl
