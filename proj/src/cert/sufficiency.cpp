#include "ccl/cert/sufficiency.hpp"

#include <algorithm>

#include "ccl/core/error.hpp"

namespace ccl {

namespace {

Rational minimal(const CertReport& r, const Rational& E) {
  for (const auto& [e, c] : r.sweep) {
    if (e == E) return c;
  }
  throw Error(ErrorCode::ParameterOutOfRange, r.property + " was not swept at E = " + E.str());
}

SamplePlan with_sweep(SamplePlan plan, const Rational& E) {
  plan.sweep = with_value(plan.sweep, E);
  return plan;
}

void absorb_counts(CertReport& r) {
  r.exhaustive = true;
  for (const auto& p : r.parts) {
    r.tuples += p.tuples;
    r.evaluations += p.evaluations;
    r.skipped += p.skipped;
    r.exhaustive = r.exhaustive && p.exhaustive;
    r.seed = std::max(r.seed, p.seed);
  }
}

Rational min_consistency(const CertReport& r) {
  // certified at K = 0 means the display never went above 0; otherwise the
  // witness carries the requirement
  return r.certified ? Rational(0) : r.witness->required;
}

}  // namespace

CertReport cross_check_gccc(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                            const SamplePlan& plan_in) {
  SamplePlan plan = with_sweep(plan_in, E);
  CertReport r;
  r.property = "sufficiency-gccc";
  r.core_radius = plan.core_radius;
  r.parts.push_back(check_gccc1(g, core, E, Rational(0), plan));
  r.parts.push_back(check_gccc2(g, core, E, Rational(0), plan));
  Rational premise = max(minimal(r.parts[0], E), minimal(r.parts[1], E));
  Rational budget = Rational(2) * premise;
  r.parts.push_back(check_gcc(g, core, E, budget, plan));
  Rational conclusion = minimal(r.parts[2], E);
  r.profile = {{"E", E}, {"C_premise", premise}, {"C_conclusion", conclusion}, {"C_budget", budget}};
  r.certified = !(conclusion > budget);
  absorb_counts(r);
  return r;
}

CertReport cross_check_ccgccc(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                              const SamplePlan& plan_in) {
  SamplePlan plan = with_sweep(plan_in, E);
  CertReport r;
  r.property = "sufficiency-ccgccc";
  r.core_radius = plan.core_radius;
  CertReport geo = check_geodesic(g, core, plan);
  if (!geo.certified) throw Error(ErrorCode::NotGeodesic, geo.witness_text);
  r.parts.push_back(check_consistency(g, core, Rational(0), plan));
  Rational K = min_consistency(r.parts[0]);
  r.parts.push_back(check_forward(g, core, E, Rational(0), plan));
  r.parts.push_back(check_backward(g, core, E, Rational(0), plan));
  Rational premise = max(minimal(r.parts[1], E), minimal(r.parts[2], E));
  Rational budget = Rational(2) * premise + Rational(4) * K;
  r.parts.push_back(check_gcc(g, core, E, budget, plan));
  Rational conclusion = minimal(r.parts[3], E);
  r.profile = {{"E", E}, {"K", K}, {"C_premise", premise}, {"C_conclusion", conclusion}, {"C_budget", budget}};
  r.certified = !(conclusion > budget);
  absorb_counts(r);
  return r;
}

CertReport cross_check_thin(const Combing& g, const std::vector<std::vector<VertexId>>& candidates,
                            const std::vector<VertexId>& core, const Rational& C, const Rational& D,
                            const Rational& E, const SamplePlan& plan_in) {
  const Rational E2 = E + Rational(2);
  SamplePlan plan = with_sweep(plan_in, E2);
  CertReport r;
  r.property = "sufficiency-thin";
  r.core_radius = plan.core_radius;
  r.parts.push_back(check_thinness(g, candidates, core, C, D, E, ThinDirection::Forward, plan));
  r.parts.push_back(check_thinness(g, candidates, core, C, D, E, ThinDirection::Backward, plan, false));
  for (std::size_t i = 0; i < 2; ++i) {
    if (!r.parts[i].certified) {
      throw Error(ErrorCode::PremiseNotCertified, r.parts[i].property + ": " + r.parts[i].witness_text);
    }
  }
  r.parts.push_back(check_consistency(g, core, Rational(0), plan));
  Rational K = min_consistency(r.parts.back());
  Rational budget = Rational(6) * E * D + Rational(12) * D + C;
  r.parts.push_back(check_forward(g, core, E2, budget, plan));
  r.parts.push_back(check_backward(g, core, E2, budget, plan));
  Rational fwd = minimal(r.parts[3], E2), bwd = minimal(r.parts[4], E2);
  Rational gcc_budget = Rational(2) * budget + Rational(4) * K;
  r.parts.push_back(check_gcc(g, core, E2, gcc_budget, plan));
  Rational gcc = minimal(r.parts[5], E2);
  r.profile = {{"C", C},          {"D", D},          {"E", E},        {"K", K},
               {"E_conclusion", E2}, {"C_budget", budget}, {"C_forward", fwd}, {"C_backward", bwd},
               {"C_gcc", gcc},    {"C_gcc_budget", gcc_budget}};
  r.certified = !(fwd > budget) && !(bwd > budget) && !(gcc > gcc_budget);
  absorb_counts(r);
  return r;
}

}  // namespace ccl
