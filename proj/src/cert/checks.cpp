#include "ccl/cert/checks.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "ccl/core/error.hpp"

namespace ccl {

namespace {

struct Geo {
  const PathCache& cache;
  const MetricGraph& g;
  const DistanceOracle& d;
  explicit Geo(const PathCache& c) : cache(c), g(c.combing().graph()), d(c.combing().metric()) {}
  GraphPoint at(const GeodesicPath& p, const Rational& t) const { return eval_path(g, p, t); }
  Rational dist(const GraphPoint& p, const GraphPoint& q) const { return d.distance(p, q); }
  Rational dist(VertexId u, VertexId v) const { return d.distance(u, v); }
};

bool connected_all(const Geo& geo, std::span<const VertexId> t) {
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!geo.d.connected(t[0], t[i])) return false;
  }
  return true;
}

// grid values together with every ratio beta/a for breakpoints beta <= a, so
// that c*a hits each breakpoint of the first path
void add_ratios(std::vector<Rational>& out, const std::vector<Rational>& bps, const Rational& a) {
  if (a.is_zero()) return;
  for (const auto& b : bps) {
    if (b <= a) out.push_back(b / a);
  }
}

Rational clamp0(const Rational& r) { return r.sign() < 0 ? Rational(0) : r; }

// d(gamma1(a), gamma2(b)) for the last (a, b); the innermost axis is c, so
// consecutive evaluations share their endpoints
struct EndMemo {
  bool valid = false;
  Rational a, b, d;
  const Rational& get(const Geo& geo, const GeodesicPath& p1, const GeodesicPath& p2, const Rational& a_,
                      const Rational& b_) {
    if (!valid || a != a_ || b != b_) {
      a = a_;
      b = b_;
      d = geo.dist(geo.at(p1, a), geo.at(p2, b));
      valid = true;
    }
    return d;
  }
};

}  // namespace

Theta Theta::affine(Rational slope, Rational offset) {
  if (slope.sign() < 0) throw Error(ErrorCode::ParameterOutOfRange, "theta must be non-decreasing");
  Theta t;
  t.kind = Kind::Affine;
  t.slope = slope;
  t.offset = offset;
  return t;
}

Theta Theta::step_table(std::vector<std::pair<Rational, Rational>> steps) {
  if (steps.empty()) throw Error(ErrorCode::ParameterOutOfRange, "empty theta table");
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (!(steps[i - 1].first < steps[i].first) || steps[i].second < steps[i - 1].second) {
      throw Error(ErrorCode::ParameterOutOfRange, "theta table must be strictly increasing in x and non-decreasing");
    }
  }
  Theta t;
  t.kind = Kind::Steps;
  t.steps = std::move(steps);
  return t;
}

Rational Theta::operator()(const Rational& x) const {
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::Affine:
      return slope * x + offset;
    case Kind::Steps: {
      auto it = std::upper_bound(steps.begin(), steps.end(), x,
                                 [](const Rational& v, const auto& s) { return v < s.first; });
      if (it == steps.begin()) return steps.front().second;
      return std::prev(it)->second;
    }
  }
  return x;
}

std::string Theta::str() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Affine:
      return "affine(" + slope.str() + "," + offset.str() + ")";
    case Kind::Steps: {
      std::string s = "steps(";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) s += ";";
        s += steps[i].first.str() + ":" + steps[i].second.str();
      }
      return s + ")";
    }
  }
  return "?";
}

std::optional<Rational> CertReport::constant(const std::string& name) const {
  for (const auto& [k, v] : profile) {
    if (k == name) return v;
  }
  return std::nullopt;
}

const CertReport* CertReport::part(const std::string& name) const {
  for (const auto& p : parts) {
    if (p.property == name) return &p;
  }
  return nullptr;
}

Display geodesic_display(const PathCache& cache) {
  Display d{"geodesic", 2, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache)](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p = geo->cache.get(t[0], t[1]);
    Rational dxy = geo->dist(t[0], t[1]);
    DisplayCase c;
    c.eval = [&p, dxy](std::span<const Rational>, std::vector<Sample>& out) {
      Rational dev = (p.length() - dxy).abs();
      Rational worst(0);
      for (const auto& [kt, ks] : p.knots) worst = max(worst, (ks - kt * p.length()).abs());
      out.push_back({dev + worst, Rational(0), Rational(0)});
    };
    return c;
  };
  return d;
}

Display qg_display(const PathCache& cache, int den) {
  Display d{"quasigeodesic", 2, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p = geo->cache.get(t[0], t[1]);
    auto grid = std::make_shared<std::vector<Rational>>(param_grid(den, p.breakpoints()));
    Rational dxy = geo->dist(t[0], t[1]);
    DisplayCase c;
    c.axes = 2;
    c.axis = [grid](std::size_t, std::span<const Rational>) { return *grid; };
    c.eval = [geo, &p, dxy](std::span<const Rational> v, std::vector<Sample>& out) {
      Rational l = geo->dist(geo->at(p, v[0]), geo->at(p, v[1]));
      Rational delta = (v[0] - v[1]).abs() * dxy;
      out.push_back({l, delta, Rational(0)});    // upper: l <= lambda*delta + k
      out.push_back({-l, Rational(0), delta});   // lower: delta/lambda - k <= l
    };
    return c;
  };
  return d;
}

Display gcc_display(const PathCache& cache, int den) {
  Display d{"gcc", 4, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p1 = geo->cache.get(t[0], t[1]);
    const GeodesicPath& p2 = geo->cache.get(t[2], t[3]);
    auto bp1 = std::make_shared<std::vector<Rational>>(p1.breakpoints());
    auto bp2 = std::make_shared<std::vector<Rational>>(p2.breakpoints());
    Rational dx = geo->dist(t[0], t[2]);
    DisplayCase c;
    c.axes = 3;
    c.axis = [bp1, bp2, den](std::size_t k, std::span<const Rational> pre) {
      if (k == 0) return param_grid(den, *bp1);
      if (k == 1) return param_grid(den, *bp2);
      std::vector<Rational> extra;
      add_ratios(extra, *bp1, pre[0]);
      add_ratios(extra, *bp2, pre[1]);
      return param_grid(den, extra);
    };
    c.eval = [geo, &p1, &p2, dx, memo = EndMemo{}](std::span<const Rational> v, std::vector<Sample>& out) mutable {
      const Rational &a = v[0], &b = v[1], &cc = v[2];
      const Rational& dy = memo.get(*geo, p1, p2, a, b);
      Rational l = geo->dist(geo->at(p1, cc * a), geo->at(p2, cc * b));
      out.push_back({l, (Rational(1) - cc) * dx + cc * dy, Rational(0)});
    };
    return c;
  };
  return d;
}

Display gccc1_display(const PathCache& cache, int den) {
  Display d{"gccc1", 3, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p1 = geo->cache.get(t[0], t[1]);
    const GeodesicPath& p2 = geo->cache.get(t[0], t[2]);
    auto bp1 = std::make_shared<std::vector<Rational>>(p1.breakpoints());
    auto bp2 = std::make_shared<std::vector<Rational>>(p2.breakpoints());
    DisplayCase c;
    c.axes = 3;
    c.axis = [bp1, bp2, den](std::size_t k, std::span<const Rational> pre) {
      if (k == 0) return param_grid(den, *bp1);
      if (k == 1) return param_grid(den, *bp2);
      std::vector<Rational> extra;
      add_ratios(extra, *bp1, pre[0]);
      add_ratios(extra, *bp2, pre[1]);
      return param_grid(den, extra);
    };
    c.eval = [geo, &p1, &p2, memo = EndMemo{}](std::span<const Rational> v, std::vector<Sample>& out) mutable {
      const Rational &a = v[0], &b = v[1], &cc = v[2];
      const Rational& dy = memo.get(*geo, p1, p2, a, b);
      Rational l = geo->dist(geo->at(p1, cc * a), geo->at(p2, cc * b));
      out.push_back({l, cc * dy, Rational(0)});
    };
    return c;
  };
  return d;
}

Display gccc2_display(const PathCache& cache, int den) {
  // tuple (x1, x2, y); a runs over breakpoints so y' = gamma(x1,y)(a) is a vertex
  Display d{"gccc2", 3, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p1 = geo->cache.get(t[0], t[2]);
    auto bp1 = std::make_shared<std::vector<Rational>>(p1.breakpoints());
    Rational dx = geo->dist(t[0], t[1]);
    VertexId x2 = t[1];
    DisplayCase c;
    c.axes = 2;
    c.axis = [geo, bp1, den, &p1, x2](std::size_t k, std::span<const Rational> pre) {
      if (k == 0) return param_grid(0, *bp1);
      std::vector<Rational> extra;
      add_ratios(extra, *bp1, pre[0]);
      VertexId y = geo->at(p1, pre[0]).vertex();
      auto bp2 = geo->cache.get(x2, y).breakpoints();
      extra.insert(extra.end(), bp2.begin(), bp2.end());
      return param_grid(den, extra);
    };
    c.eval = [geo, &p1, dx, x2](std::span<const Rational> v, std::vector<Sample>& out) {
      const Rational &a = v[0], &cc = v[1];
      GraphPoint yp = geo->at(p1, a);
      if (!yp.is_vertex()) throw Error(ErrorCode::ParameterOutOfRange, "gccc2 endpoint is not a vertex");
      const GeodesicPath& p2 = geo->cache.get(x2, yp.vertex());
      Rational l = geo->dist(geo->at(p1, cc * a), geo->at(p2, cc));
      out.push_back({l, (Rational(1) - cc) * dx, Rational(0)});
    };
    return c;
  };
  return d;
}

Display consistency_display(const PathCache& cache, int den) {
  Display d{"consistency", 2, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p = geo->cache.get(t[0], t[1]);
    auto bp = std::make_shared<std::vector<Rational>>(p.breakpoints());
    VertexId x = t[0];
    DisplayCase c;
    c.axes = 2;
    c.axis = [geo, bp, den, &p, x](std::size_t k, std::span<const Rational> pre) {
      if (k == 0) return param_grid(0, *bp);
      std::vector<Rational> extra;
      add_ratios(extra, *bp, pre[0]);
      auto bz = geo->cache.get(x, geo->at(p, pre[0]).vertex()).breakpoints();
      extra.insert(extra.end(), bz.begin(), bz.end());
      return param_grid(den, extra);
    };
    c.eval = [geo, &p, x](std::span<const Rational> v, std::vector<Sample>& out) {
      const Rational &a = v[0], &cc = v[1];
      GraphPoint z = geo->at(p, a);
      if (!z.is_vertex()) throw Error(ErrorCode::ParameterOutOfRange, "consistency endpoint is not a vertex");
      const GeodesicPath& pz = geo->cache.get(x, z.vertex());
      out.push_back({geo->dist(geo->at(pz, cc), geo->at(p, cc * a)), Rational(0), Rational(0)});
    };
    return c;
  };
  return d;
}

namespace {

// forward (v, w1, w2) or backward (v1, v2, w) convexity
Display convexity_display(const PathCache& cache, int den, bool forward) {
  Display d{forward ? "forward" : "backward", 3, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den,
               forward](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p1 = forward ? geo->cache.get(t[0], t[1]) : geo->cache.get(t[0], t[2]);
    const GeodesicPath& p2 = forward ? geo->cache.get(t[0], t[2]) : geo->cache.get(t[1], t[2]);
    Rational dm = forward ? geo->dist(t[1], t[2]) : geo->dist(t[0], t[1]);
    auto extra = p1.breakpoints();
    auto b2 = p2.breakpoints();
    extra.insert(extra.end(), b2.begin(), b2.end());
    auto grid = std::make_shared<std::vector<Rational>>(param_grid(den, extra));
    DisplayCase c;
    c.axes = 1;
    c.axis = [grid](std::size_t, std::span<const Rational>) { return *grid; };
    c.eval = [geo, &p1, &p2, dm, forward](std::span<const Rational> v, std::vector<Sample>& out) {
      const Rational& cc = v[0];
      Rational l = geo->dist(geo->at(p1, cc), geo->at(p2, cc));
      out.push_back({l, (forward ? cc : Rational(1) - cc) * dm, Rational(0)});
    };
    return c;
  };
  return d;
}

}  // namespace

Display forward_display(const PathCache& cache, int den) { return convexity_display(cache, den, true); }
Display backward_display(const PathCache& cache, int den) { return convexity_display(cache, den, false); }

Display bounded_display(const PathCache& cache, int den) {
  Display d{"bounded", 4, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p1 = geo->cache.get(t[0], t[1]);
    const GeodesicPath& p2 = geo->cache.get(t[2], t[3]);
    Rational dm = max(geo->dist(t[0], t[2]), geo->dist(t[1], t[3]));
    auto extra = p1.breakpoints();
    auto b2 = p2.breakpoints();
    extra.insert(extra.end(), b2.begin(), b2.end());
    auto grid = std::make_shared<std::vector<Rational>>(param_grid(den, extra));
    DisplayCase c;
    c.axes = 1;
    c.axis = [grid](std::size_t, std::span<const Rational>) { return *grid; };
    c.eval = [geo, &p1, &p2, dm](std::span<const Rational> v, std::vector<Sample>& out) {
      out.push_back({geo->dist(geo->at(p1, v[0]), geo->at(p2, v[0])), dm, Rational(0)});
    };
    return c;
  };
  return d;
}

Display cc_param_display(const PathCache& cache, int den, Theta theta) {
  Display d{theta.kind == Theta::Kind::Identity ? "cc-param-identity" : "cc-param", 4, 1, {}};
  d.prepare = [geo = std::make_shared<Geo>(cache), den,
               theta](std::span<const VertexId> t) -> std::optional<DisplayCase> {
    if (!connected_all(*geo, t)) return std::nullopt;
    const GeodesicPath& p1 = geo->cache.get(t[0], t[1]);
    const GeodesicPath& p2 = geo->cache.get(t[2], t[3]);
    Rational d1 = geo->dist(t[0], t[1]), d2 = geo->dist(t[2], t[3]), dx = geo->dist(t[0], t[2]);
    auto g1 = std::make_shared<std::vector<Rational>>(param_grid(den, p1.breakpoints()));
    auto g2 = std::make_shared<std::vector<Rational>>(param_grid(den, p2.breakpoints()));
    DisplayCase c;
    c.axes = 2;
    c.axis = [g1, g2](std::size_t k, std::span<const Rational>) { return k == 0 ? *g1 : *g2; };
    c.eval = [geo, &p1, &p2, d1, d2, dx, theta](std::span<const Rational> v, std::vector<Sample>& out) {
      Rational gap = (v[0] * d1 - v[1] * d2).abs();
      Rational arg = dx + geo->dist(geo->at(p1, v[0]), geo->at(p2, v[1]));
      out.push_back({gap - theta(arg), Rational(0), Rational(0)});
    };
    return c;
  };
  return d;
}

std::optional<Display> display_by_name(const std::string& name, const PathCache& cache, int den,
                                       const std::optional<Theta>& theta) {
  if (name == "geodesic") return geodesic_display(cache);
  if (name == "quasigeodesic") return qg_display(cache, den);
  if (name == "gcc") return gcc_display(cache, den);
  if (name == "gccc1") return gccc1_display(cache, den);
  if (name == "gccc2") return gccc2_display(cache, den);
  if (name == "consistency") return consistency_display(cache, den);
  if (name == "forward") return forward_display(cache, den);
  if (name == "backward") return backward_display(cache, den);
  if (name == "bounded") return bounded_display(cache, den);
  if (name == "cc-param-identity") return cc_param_display(cache, den, Theta::identity());
  if (name == "cc-param" && theta) return cc_param_display(cache, den, *theta);
  return std::nullopt;
}

std::string describe_witness(const MetricGraph& g, const Witness& w) {
  std::ostringstream os;
  os << w.display << "(";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) os << (i ? ", " : "") << g.label(w.tuple[i]);
  os << "; ";
  for (std::size_t i = 0; i < w.params.size(); ++i) os << (i ? ", " : "") << w.params[i];
  os << ") needs " << w.required << " at " << w.multiplier << ", bound " << w.bound;
  return os.str();
}

namespace detail {

std::vector<Rational> multipliers_with(const SamplePlan& plan, const Rational& extra) {
  return with_value(plan.sweep, extra);
}

void apply_measurement(CertReport& r, const Measurement& m, const Rational& multiplier, const Rational& bound,
                       const MetricGraph& g, const SamplePlan& plan, const std::string& sweep_axis,
                       std::size_t channel) {
  r.tuples = m.tuples;
  r.evaluations = m.evaluations;
  r.skipped = m.skipped;
  r.exhaustive = m.exhaustive;
  r.seed = m.exhaustive ? 0 : m.seed;
  r.core_radius = plan.core_radius;
  const Extremum& e = m.at(multiplier, channel);
  r.certified = !e.any || !(e.required > bound);
  if (!r.certified) {
    Witness w = e.witness;
    w.bound = bound;
    r.witness = w;
    r.witness_text = describe_witness(g, w);
  }
  r.sweep_axis = sweep_axis;
  r.sweep.clear();
  if (!sweep_axis.empty()) {
    for (const auto& s : plan.sweep) r.sweep.emplace_back(s, clamp0(m.required(s, channel)));
  }
}

}  // namespace detail

namespace {

CertReport run_simple(const std::string& property, const Display& display, const Combing& g,
                      const std::vector<VertexId>& core, const Rational& multiplier, const Rational& bound,
                      const SamplePlan& plan, const std::string& sweep_axis,
                      std::vector<std::pair<std::string, Rational>> profile) {
  CertReport r;
  r.property = property;
  r.profile = std::move(profile);
  auto mult = sweep_axis.empty() ? std::vector<Rational>{multiplier} : detail::multipliers_with(plan, multiplier);
  Measurement m = measure(display, core, mult, plan);
  detail::apply_measurement(r, m, multiplier, bound, g.graph(), plan, sweep_axis);
  return r;
}

void require_constants(const Rational& mult, const Rational& add, const char* what) {
  if (mult < Rational(1) || add.sign() < 0) {
    throw Error(ErrorCode::ParameterOutOfRange, std::string(what) + " needs a multiplier >= 1 and a constant >= 0");
  }
}

void require_geodesic(const Combing& g, const std::vector<VertexId>& core, const SamplePlan& plan) {
  CertReport r = check_geodesic(g, core, plan);
  if (!r.certified) throw Error(ErrorCode::NotGeodesic, r.witness_text);
}

}  // namespace

CertReport check_geodesic(const Combing& g, const std::vector<VertexId>& core, const SamplePlan& plan) {
  PathCache cache(g);
  return run_simple("geodesic", geodesic_display(cache), g, core, Rational(1), Rational(0), plan, "", {});
}

CertReport check_quasigeodesic(const Combing& g, const std::vector<VertexId>& core, const Rational& lambda,
                               const Rational& k, const SamplePlan& plan) {
  require_constants(lambda, k, "quasigeodesic");
  PathCache cache(g);
  return run_simple("quasigeodesic", qg_display(cache, plan.grid_den), g, core, lambda, k, plan, "lambda",
                    {{"lambda", lambda}, {"k", k}});
}

CertReport check_gcc(const Combing& g, const std::vector<VertexId>& core, const Rational& E, const Rational& C,
                     const SamplePlan& plan) {
  require_constants(E, C, "gcc");
  require_geodesic(g, core, plan);
  PathCache cache(g);
  return run_simple("gcc", gcc_display(cache, plan.gcc_grid_den), g, core, E, C, plan, "E", {{"E", E}, {"C", C}});
}

CertReport check_gccc1(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                       const Rational& C, const SamplePlan& plan) {
  require_constants(E, C, "gccc1");
  PathCache cache(g);
  return run_simple("gccc1", gccc1_display(cache, plan.gcc_grid_den), g, core, E, C, plan, "E",
                    {{"E", E}, {"C", C}});
}

CertReport check_gccc2(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                       const Rational& C, const SamplePlan& plan) {
  require_constants(E, C, "gccc2");
  PathCache cache(g);
  return run_simple("gccc2", gccc2_display(cache, plan.grid_den), g, core, E, C, plan, "E", {{"E", E}, {"C", C}});
}

CertReport check_consistency(const Combing& g, const std::vector<VertexId>& core, const Rational& K,
                             const SamplePlan& plan) {
  require_constants(Rational(1), K, "consistency");
  PathCache cache(g);
  return run_simple("consistency", consistency_display(cache, plan.grid_den), g, core, Rational(1), K, plan, "",
                    {{"K", K}});
}

CertReport check_forward(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                         const Rational& C, const SamplePlan& plan) {
  require_constants(E, C, "forward");
  PathCache cache(g);
  return run_simple("forward", forward_display(cache, plan.grid_den), g, core, E, C, plan, "E",
                    {{"E", E}, {"C", C}});
}

CertReport check_backward(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                          const Rational& C, const SamplePlan& plan) {
  require_constants(E, C, "backward");
  PathCache cache(g);
  return run_simple("backward", backward_display(cache, plan.grid_den), g, core, E, C, plan, "E",
                    {{"E", E}, {"C", C}});
}

CertReport check_forward_backward(const Combing& g, const std::vector<VertexId>& core, const Rational& E,
                                  const Rational& C, const SamplePlan& plan) {
  CertReport r;
  r.property = "forward-backward";
  r.profile = {{"E", E}, {"C", C}};
  r.core_radius = plan.core_radius;
  r.parts.push_back(check_forward(g, core, E, C, plan));
  r.parts.push_back(check_backward(g, core, E, C, plan));
  for (const auto& p : r.parts) {
    r.certified = r.certified && p.certified;
    r.tuples += p.tuples;
    r.evaluations += p.evaluations;
    r.skipped += p.skipped;
    r.exhaustive = r.exhaustive && p.exhaustive;
    r.seed = std::max(r.seed, p.seed);
  }
  return r;
}

CertReport check_bounded(const Combing& g, const std::vector<VertexId>& core, const Rational& lambda,
                         const Rational& k, const Rational& c1, const Rational& c2, const SamplePlan& plan) {
  require_constants(c1, c2, "bounded");
  CertReport qg = check_quasigeodesic(g, core, lambda, k, plan);
  if (!qg.certified) throw Error(ErrorCode::NotQuasiGeodesic, qg.witness_text);
  PathCache cache(g);
  CertReport r = run_simple("bounded", bounded_display(cache, plan.grid_den), g, core, c1, c2, plan, "c1",
                            {{"lambda", lambda}, {"k", k}, {"c1", c1}, {"c2", c2}});
  r.parts.push_back(std::move(qg));
  return r;
}

CertReport check_cc_full(const Combing& g, const std::vector<VertexId>& core, const Rational& lambda,
                         const Rational& k, const Rational& E, const Rational& C, const Theta& theta,
                         const SamplePlan& plan) {
  require_constants(E, C, "cc");
  CertReport r;
  r.property = "cc";
  r.profile = {{"lambda", lambda}, {"k", k}, {"E", E}, {"C", C}};
  r.theta = theta;
  r.core_radius = plan.core_radius;
  PathCache cache(g);
  r.parts.push_back(check_quasigeodesic(g, core, lambda, k, plan));
  r.parts.push_back(run_simple("cc-convexity", gcc_display(cache, plan.gcc_grid_den), g, core, E, C, plan, "E",
                               {{"E", E}, {"C", C}}));
  CertReport param = run_simple("cc-param", cc_param_display(cache, plan.grid_den, theta), g, core, Rational(1),
                                Rational(0), plan, "", {});
  param.theta = theta;
  r.parts.push_back(std::move(param));
  if (check_geodesic(g, core, plan).certified) {
    r.parts.push_back(run_simple("cc-param-identity", cc_param_display(cache, plan.grid_den, Theta::identity()), g,
                                 core, Rational(1), Rational(0), plan, "", {}));
    r.notes.push_back("geodesic combing: identity theta checked");
  }
  for (const auto& p : r.parts) {
    r.certified = r.certified && p.certified;
    r.tuples += p.tuples;
    r.evaluations += p.evaluations;
    r.skipped += p.skipped;
    r.exhaustive = r.exhaustive && p.exhaustive;
    r.seed = std::max(r.seed, p.seed);
  }
  return r;
}

}  // namespace ccl
