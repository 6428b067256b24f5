#include <sstream>

#include "ccl/core/error.hpp"
#include "ccl/harness/scenario.hpp"

namespace ccl {

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog{
      {"tree-sanity", "geodesic bicombings on trees",
       "Seeded random trees with the canonical combing; geodesic, gcc at (1,0), consistency 0 and "
       "bounded at (1,0,1,0).",
       true,
       {"geodesic", "gcc", "consistency", "bounded"},
       {}},
      {"cycle6-sufficiency", "sufficient conditions for geodesic coarse convexity",
       "The unit 6-cycle: minimal gcc constants, and the gccc, consistency-plus-convexity and thinness "
       "cross-checks with their derived budgets.",
       false,
       {"gcc", "sufficiency-gccc", "sufficiency-ccgccc", "sufficiency-thin"},
       {}},
      {"f2xz-coned", "the coned-off construction Coned(X, psi, phi) and its extended bicombing Gamma-hat",
       "X is the coned-off Cayley ball of F2 x Z with peripheral <a>; graph cones of radius D are attached "
       "over the core group elements and Gamma-hat extends the canonical combing of X. Checks the cone "
       "conditions, the isometric embedding of X, cone crossings, geodesicity and gcc constants of "
       "Gamma-hat.",
       true,
       {"cone-validation", "isometric-embedding", "cone-crossings", "geodesic", "gcc", "sufficiency-gccc",
        "sufficiency-ccgccc", "sufficiency-thin"},
       {}},
      {"amalgam-f2", "C-pushout of two Z lines over trivial C, a tree of spaces for Z * Z",
       "Structural suite of the pushout (xi fibers, vertex-space convexity, T bipartite and acyclic, spike "
       "identifications, stabilizer bookkeeping), equivariance of the combined bicombing and the orbit-map "
       "quasi-isometry probe from the Cayley graph of F2.",
       false,
       {"structural", "equivariance", "qi-probe"},
       {"qi-probe"}},
      {"hnn-z2", "phi-coalescence of Z^2 with trivial associated subgroup",
       "Structural suite of the coalescence of the subdivided Z^2 plane along two basepoints in different "
       "orbits. The equivariance check reports violations: the copy stabilizer is all of Z^2, which does not "
       "preserve lexicographic tie-breaks.",
       false,
       {"structural", "equivariance"},
       {}},
      {"z3-relative", "relative proper discontinuity, Z^3 with H = Z^2 x 0 and K = Z x 0 x 0",
       "Z^3 acting on its Cayley graph coned over H and K, with only H declared peripheral; the relative "
       "diameter of the returning sets V_r grows with r.",
       false,
       {"properness-growth", "properness-finite"},
       {"properness-growth", "properness-finite"}},
      {"f2xz-relative", "relative proper discontinuity, F2 x Z acting on its coned-off Cayley graph",
       "Returning sets V_r of F2 x Z with peripheral <a>; each has finite diameter relative to <a>.",
       false,
       {"properness-finite", "properness-growth"},
       {"properness-finite", "properness-growth"}},
      {"spherical-cone", "spherical cone metric of the coned-off construction",
       "Seeded (s, t, d_X) triples: cone distances against an independent planar development, and the "
       "through-apex sums when d_X >= pi.",
       true,
       {"formula", "through-apex"},
       {"formula", "through-apex"}},
      {"combination", "the combined bicombing of a tree of spaces",
       "Two cycles spiked to one gluing point. The vertex-space constants are measured, then the combined "
       "bicombing is certified within the derived budgets: gcc (E+2, 6C), quasi-geodesic (lambda, 2c), "
       "bounded (lambda, 2k, lambda c1, 2k+c1+c2) and consistency K = C.",
       false,
       {"pieces", "combined-qg", "combined-bounded", "combined-gcc", "combined-consistency"},
       {}},
  };
  return catalog;
}

const ScenarioInfo* find_scenario(const std::string& name) {
  for (const auto& s : scenario_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

std::string list_scenarios() {
  std::ostringstream os;
  for (const auto& s : scenario_catalog()) os << s.name << "  " << s.construct << "\n";
  return os.str();
}

std::string describe_scenario(const std::string& name) {
  const ScenarioInfo* s = find_scenario(name);
  if (!s) throw Error(ErrorCode::UnknownScenario, "no scenario named '" + name + "'");
  std::ostringstream os;
  os << s->name << "\n  exercises: " << s->construct << "\n  " << s->summary << "\n  checks:";
  for (const auto& c : s->checks) os << " " << c;
  os << "\n  seed: " << (s->sampled ? "required (sampled checks)" : "optional") << "\n";
  return os.str();
}

}  // namespace ccl
