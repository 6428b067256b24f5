#include "ccl/cert/engine.hpp"

#include <algorithm>
#include <mutex>

#include "ccl/core/error.hpp"
#include "ccl/core/parallel.hpp"
#include "ccl/core/rng.hpp"

namespace ccl {

namespace {

constexpr std::uint64_t kExhaustiveChunk = 256;
constexpr std::uint64_t kSampleChunk = 1024;

struct ChunkResult {
  std::vector<Extremum> best;
  std::uint64_t tuples = 0, evaluations = 0, skipped = 0;
};

class Accumulator {
 public:
  Accumulator(const Display& d, const std::vector<Rational>& mult, ChunkResult& out)
      : display_(d), mult_(mult), out_(out) {
    out_.best.assign(mult.size() * d.channels, Extremum{});
  }

  void record(std::span<const VertexId> tuple, std::span<const Rational> params) {
    samples_.clear();
    current_.eval(params, samples_);
    ++out_.evaluations;
    for (std::size_t s = 0; s < samples_.size(); ++s) {
      const Sample& smp = samples_[s];
      if (smp.channel >= display_.channels) throw Error(ErrorCode::ParameterOutOfRange, "sample channel");
      for (std::size_t j = 0; j < mult_.size(); ++j) {
        Rational r = smp.at(mult_[j]);
        Extremum& b = out_.best[smp.channel * mult_.size() + j];
        if (b.any && !(r > b.required)) continue;
        b.any = true;
        b.required = r;
        Witness& w = b.witness;
        w.display = display_.name;
        w.tuple.assign(tuple.begin(), tuple.end());
        w.params.assign(params.begin(), params.end());
        w.sample = s;
        w.channel = smp.channel;
        w.multiplier = mult_[j];
        w.lhs = smp.lhs;
        w.m = smp.m;
        w.inv = smp.inv;
        w.required = r;
      }
    }
  }

  bool begin(std::span<const VertexId> tuple) {
    ++out_.tuples;
    auto c = display_.prepare(tuple);
    if (!c) {
      ++out_.skipped;
      return false;
    }
    current_ = std::move(*c);
    return true;
  }

  void exhaust(std::span<const VertexId> tuple, std::vector<Rational>& prefix) {
    if (prefix.size() == current_.axes) {
      record(tuple, prefix);
      return;
    }
    auto values = current_.axis(prefix.size(), prefix);
    for (const auto& v : values) {
      prefix.push_back(v);
      exhaust(tuple, prefix);
      prefix.pop_back();
    }
  }

  void random(std::span<const VertexId> tuple, Rng& rng) {
    std::vector<Rational> prefix;
    while (prefix.size() < current_.axes) {
      auto values = current_.axis(prefix.size(), prefix);
      if (values.empty()) {
        ++out_.skipped;
        return;
      }
      prefix.push_back(values[rng.below(values.size())]);
    }
    record(tuple, prefix);
  }

 private:
  const Display& display_;
  const std::vector<Rational>& mult_;
  ChunkResult& out_;
  DisplayCase current_;
  std::vector<Sample> samples_;
};

std::uint64_t checked_power(std::size_t n, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && total > cap / n) return cap + 1;
    total *= n;
  }
  return total;
}

}  // namespace

const Extremum& Measurement::at(const Rational& multiplier, std::size_t channel) const {
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (multipliers[i] == multiplier) return best.at(channel * multipliers.size() + i);
  }
  throw Error(ErrorCode::ParameterOutOfRange, "multiplier " + multiplier.str() + " was not measured");
}

Rational Measurement::required(const Rational& multiplier, std::size_t channel) const {
  const Extremum& e = at(multiplier, channel);
  return e.any ? e.required : Rational(0);
}

bool use_exhaustive(std::size_t core, std::size_t arity, const SamplePlan& plan) {
  return core <= plan.exhaustive_core && checked_power(core, arity, plan.tuple_budget) <= plan.tuple_budget;
}

Measurement measure(const Display& display, const std::vector<VertexId>& core,
                    const std::vector<Rational>& multipliers, const SamplePlan& plan) {
  Measurement out;
  out.multipliers = multipliers;
  out.exhaustive = use_exhaustive(core.size(), display.arity, plan);
  out.seed = plan.seed;
  out.channels = display.channels;
  const std::size_t n = core.size();
  const std::size_t k = display.arity;
  if (n == 0) {
    out.best.assign(multipliers.size() * display.channels, Extremum{});
    return out;
  }

  std::uint64_t total = out.exhaustive ? checked_power(n, k, UINT64_MAX / 2) : plan.samples;
  std::uint64_t chunk_size = out.exhaustive ? kExhaustiveChunk : kSampleChunk;
  std::size_t chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  std::vector<ChunkResult> results(chunks);

  parallel_chunks(chunks, resolve_jobs(plan.jobs), [&](std::size_t c) {
    Accumulator acc(display, multipliers, results[c]);
    std::vector<VertexId> tuple(k);
    std::uint64_t lo = c * chunk_size;
    std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk_size);
    if (out.exhaustive) {
      std::vector<Rational> prefix;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t p = k; p-- > 0;) {
          tuple[p] = core[rest % n];
          rest /= n;
        }
        if (acc.begin(tuple)) acc.exhaust(tuple, prefix);
      }
    } else {
      Rng rng(derive_seed(plan.seed, display.name, c));
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        for (std::size_t p = 0; p < k; ++p) tuple[p] = core[rng.below(n)];
        if (acc.begin(tuple)) acc.random(tuple, rng);
      }
    }
  });

  out.best.assign(multipliers.size() * display.channels, Extremum{});
  for (const auto& r : results) {
    out.tuples += r.tuples;
    out.evaluations += r.evaluations;
    out.skipped += r.skipped;
    for (std::size_t j = 0; j < out.best.size(); ++j) {
      const Extremum& e = r.best[j];
      if (!e.any) continue;
      if (!out.best[j].any || e.required > out.best[j].required) out.best[j] = e;
    }
  }
  return out;
}

std::optional<Sample> replay_sample(const Display& display, const Witness& w) {
  if (w.tuple.size() != display.arity) return std::nullopt;
  auto c = display.prepare(w.tuple);
  if (!c || w.params.size() != c->axes) return std::nullopt;
  std::vector<Sample> samples;
  c->eval(w.params, samples);
  if (w.sample >= samples.size()) return std::nullopt;
  return samples[w.sample];
}

std::vector<Rational> param_grid(int den, const std::vector<Rational>& extra) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(den) + 1 + extra.size());
  for (int i = 0; den > 0 && i <= den; ++i) out.emplace_back(i, den);
  for (const auto& e : extra) {
    if (e.sign() >= 0 && e <= Rational(1)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> with_value(std::vector<Rational> values, const Rational& v) {
  if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  return values;
}

const GeodesicPath& PathCache::get(VertexId from, VertexId to) const {
  std::uint64_t key = (static_cast<std::uint64_t>(from) << 32) | to;
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return *it->second;
  }
  auto path = std::make_unique<GeodesicPath>(combing_.path(from, to));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.try_emplace(key, std::move(path));
  return *it->second;
}

std::pair<Rational, Rational> vertex_params(const GeodesicPath& path, std::size_t i) {
  const Rational& c = path.cumulative.at(i);
  if (path.length().is_zero()) return {Rational(0), Rational(1)};
  if (path.knots.empty()) {
    Rational t = c / path.length();
    return {t, t};
  }
  std::optional<Rational> first, last;
  for (std::size_t k = 0; k + 1 < path.knots.size(); ++k) {
    const auto& [t0, s0] = path.knots[k];
    const auto& [t1, s1] = path.knots[k + 1];
    if (c < s0 || c > s1) continue;
    Rational lo, hi;
    if (s0 == s1) {
      lo = t0;
      hi = t1;
    } else {
      lo = hi = t0 + (c - s0) / (s1 - s0) * (t1 - t0);
    }
    if (!first || lo < *first) first = lo;
    if (!last || hi > *last) last = hi;
  }
  if (!first) throw Error(ErrorCode::ParameterOutOfRange, "vertex arclength outside the knot range");
  return {*first, *last};
}

}  // namespace ccl
