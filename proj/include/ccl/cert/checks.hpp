#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccl/cert/engine.hpp"

namespace ccl {

// Parameter-regularity function: identity, affine a*x + b, or a
// non-decreasing step table (x_i, y_i) with theta(x) = y_i on [x_i, x_{i+1})
// and theta(x) = y_0 below x_0.
struct Theta {
  enum class Kind { Identity, Affine, Steps };
  Kind kind = Kind::Identity;
  Rational slope{1}, offset{0};
  std::vector<std::pair<Rational, Rational>> steps;

  static Theta identity() { return {}; }
  static Theta affine(Rational slope, Rational offset);
  static Theta step_table(std::vector<std::pair<Rational, Rational>> steps);
  Rational operator()(const Rational& x) const;
  std::string str() const;
};

struct CertReport {
  std::string property;
  std::vector<std::pair<std::string, Rational>> profile;
  std::optional<Theta> theta;
  bool certified = true;
  std::optional<Witness> witness;
  std::string witness_text;
  std::uint64_t tuples = 0, evaluations = 0, skipped = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  int core_radius = -1;
  std::string sweep_axis;  // "E", "lambda" or "c1"; empty without a sweep
  std::vector<std::pair<Rational, Rational>> sweep;  // (multiplier, minimal constant)
  std::vector<std::string> notes;
  std::vector<CertReport> parts;

  std::optional<Rational> constant(const std::string& name) const;
  const CertReport* part(const std::string& property) const;
};

// Displays, exposed for replay and for tests. The cache must outlive them.
Display geodesic_display(const PathCache& cache);
Display qg_display(const PathCache& cache, int den);
Display gcc_display(const PathCache& cache, int den);
Display gccc1_display(const PathCache& cache, int den);
Display gccc2_display(const PathCache& cache, int den);
Display consistency_display(const PathCache& cache, int den);
Display forward_display(const PathCache& cache, int den);
Display backward_display(const PathCache& cache, int den);
Display bounded_display(const PathCache& cache, int den);
Display cc_param_display(const PathCache& cache, int den, Theta theta);

// rebuilds a display by name; nullopt for unknown names
std::optional<Display> display_by_name(const std::string& name, const PathCache& cache, int den,
                                       const std::optional<Theta>& theta);

// exact constant-speed geodesic on every sampled pair
CertReport check_geodesic(const Combing& g, const std::vector<VertexId>& core, const SamplePlan& plan);
CertReport check_quasigeodesic(const Combing& g, const std::vector<VertexId>& core, const Rational& lambda,
                               const Rational& k, const SamplePlan& plan);
// throws NotGeodesic
CertReport check_gcc(const Combing& g, const std::vector<VertexId>& core, const Rational& E, const Rational& C,
                     const SamplePlan& plan);
CertReport check_gccc1(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                       const Rational& C, const SamplePlan& plan);
CertReport check_gccc2(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                       const Rational& C, const SamplePlan& plan);
CertReport check_consistency(const Combing& g, const std::vector<VertexId>& core, const Rational& K,
                             const SamplePlan& plan);
CertReport check_forward(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                         const Rational& C, const SamplePlan& plan);
CertReport check_backward(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                          const Rational& C, const SamplePlan& plan);
CertReport check_forward_backward(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                                  const Rational& C, const SamplePlan& plan);
// throws NotQuasiGeodesic when the (lambda, k) premise fails
CertReport check_bounded(const Combing& g, const std::vector<VertexId>& core, const Rational& lambda,
                         const Rational& k, const Rational& c1, const Rational& c2, const SamplePlan& plan);
// items (1) and (2), plus the identity-theta bound when the combing is geodesic
CertReport check_cc_full(const Combing& g, const std::vector<VertexId>& core, const Rational& lambda,
                         const Rational& k, const Rational& E, const Rational& C, const Theta& theta,
                         const SamplePlan& plan);

// Checks that every witness in the report (and its parts) re-evaluates to the
// recorded requirement and still exceeds its bound. Thinness witnesses need
// the candidate subspaces.
bool replay_witnesses(const Combing& g, const CertReport& report,
                      const std::vector<std::vector<VertexId>>* candidates = nullptr, std::string* why = nullptr);

// label text for a witness
std::string describe_witness(const MetricGraph& g, const Witness& w);

namespace detail {
// fills counts, verdict, witness and sweep rows from a measurement; the
// verdict is required(multiplier) <= bound
void apply_measurement(CertReport& r, const Measurement& m, const Rational& multiplier, const Rational& bound,
                       const MetricGraph& g, const SamplePlan& plan, const std::string& sweep_axis,
                       std::size_t channel = 0);
std::vector<Rational> multipliers_with(const SamplePlan& plan, const Rational& extra);
}  // namespace detail

}  // namespace ccl
