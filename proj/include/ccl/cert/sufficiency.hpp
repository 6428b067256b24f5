#pragma once

#include <vector>

#include "ccl/cert/thinness.hpp"

namespace ccl {

// Brute-forced minimal premise constants against the derived conclusion
// budgets. Each report carries the measured premise and conclusion constants
// in its profile; `certified` means the conclusion fits the budget.

// gccc1 and gccc2 at E with constant C imply gcc at (E, 2C)
CertReport cross_check_gccc(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                            const SamplePlan& plan);

// K-consistency with forward and backward convexity at (E, C) imply gcc at
// (E, 2C + 4K). Throws NotGeodesic.
CertReport cross_check_ccgccc(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                              const SamplePlan& plan);

// Consistency together with forward and backward thinness at (C, D, E)
// implies forward and backward convexity at (E + 2, 6ED + 12D + C); the
// resulting gcc constant is also compared with 2(6ED + 12D + C) + 4K.
// Throws PremiseNotCertified when either thinness premise fails.
CertReport cross_check_thin(const Combing& g, const std::vector<std::vector<VertexId>>& candidates,
                            const std::vector<VertexId>& core, const Rational& C, const Rational& D,
                            const Rational& E, const SamplePlan& plan);

}  // namespace ccl
