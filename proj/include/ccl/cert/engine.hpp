#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccl/graph/combing.hpp"

namespace ccl {

// How tuples are drawn. Exhaustive enumeration runs when the core has at most
// exhaustive_core vertices and |core|^arity stays within tuple_budget;
// otherwise `samples` seeded tuples are drawn, each with one random value
// per parameter axis.
struct SamplePlan {
  std::size_t exhaustive_core = 60;
  std::uint64_t tuple_budget = 2'000'000;
  std::size_t samples = 100'000;
  std::uint64_t seed = 1;
  unsigned jobs = 0;  // 0: CCL_JOBS or 1
  int grid_den = 8;
  int gcc_grid_den = 4;  // the gcc display has three parameter axes
  int core_radius = -1;  // recorded only
  std::vector<Rational> sweep{Rational(1), Rational(3, 2), Rational(2), Rational(3), Rational(5)};
};

// One inequality instance. Its requirement on the additive constant at
// multiplicative constant E is lhs - E*m + inv/E.
struct Sample {
  Rational lhs;
  Rational m;
  Rational inv;
  std::size_t channel = 0;  // independent maxima within one display
  Rational at(const Rational& e) const {
    Rational r = lhs;
    if (!m.is_zero()) r -= e * m;
    if (!inv.is_zero()) r += inv / e;
    return r;
  }
};

struct DisplayCase {
  std::size_t axes = 0;
  // values of parameter axis k given the values already chosen on axes < k
  std::function<std::vector<Rational>(std::size_t, std::span<const Rational>)> axis;
  std::function<void(std::span<const Rational>, std::vector<Sample>&)> eval;
};

struct Display {
  std::string name;
  std::size_t arity = 0;
  std::size_t channels = 1;
  // nullopt skips the tuple
  std::function<std::optional<DisplayCase>(std::span<const VertexId>)> prepare;
};

struct Witness {
  std::string display;
  std::vector<VertexId> tuple;
  std::vector<Rational> params;
  std::size_t sample = 0;  // which inequality of the display
  std::size_t channel = 0;
  Rational multiplier{1};  // E, lambda or c1
  Rational lhs, m, inv;
  Rational required;
  Rational bound;  // the constant it was compared against
};

struct Extremum {
  bool any = false;
  Rational required;
  Witness witness;
};

struct Measurement {
  std::vector<Rational> multipliers;
  std::size_t channels = 1;
  std::vector<Extremum> best;  // [channel * multipliers + j]
  std::uint64_t tuples = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t skipped = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;

  const Extremum& at(const Rational& multiplier, std::size_t channel = 0) const;
  // requirement at multiplier; 0 when nothing was evaluated
  Rational required(const Rational& multiplier, std::size_t channel = 0) const;
};

bool use_exhaustive(std::size_t core, std::size_t arity, const SamplePlan& plan);

// Max-reduces every sample's requirement per multiplier over the tuples of
// `core`. Ties keep the earliest tuple in enumeration order, so the result
// does not depend on the number of workers.
Measurement measure(const Display& display, const std::vector<VertexId>& core,
                    const std::vector<Rational>& multipliers, const SamplePlan& plan);

// Re-evaluates a witness; nullopt if its tuple is skipped or the sample is gone.
std::optional<Sample> replay_sample(const Display& display, const Witness& w);

// {0, 1/den, ..., 1} merged with extra values, sorted and deduplicated; den <= 0
// gives the extra values alone
std::vector<Rational> param_grid(int den, const std::vector<Rational>& extra = {});

std::vector<Rational> with_value(std::vector<Rational> values, const Rational& v);

// Memoized combing paths, shared between workers.
class PathCache {
 public:
  explicit PathCache(const Combing& combing) : combing_(combing) {}
  const GeodesicPath& get(VertexId from, VertexId to) const;
  const Combing& combing() const { return combing_; }

 private:
  const Combing& combing_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<GeodesicPath>> table_;
  mutable std::shared_mutex mutex_;
};

// first and last parameter at which the path sits at vertices[i]
std::pair<Rational, Rational> vertex_params(const GeodesicPath& path, std::size_t i);

}  // namespace ccl
