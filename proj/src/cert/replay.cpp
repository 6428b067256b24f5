#include <sstream>

#include "ccl/cert/checks.hpp"
#include "ccl/cert/thinness.hpp"

namespace ccl {

namespace {

bool replay_one(const Combing& g, const CertReport& r, const PathCache& cache,
                const std::vector<std::vector<char>>* members, std::string* why) {
  for (const auto& p : r.parts) {
    if (!replay_one(g, p, cache, members, why)) return false;
  }
  if (!r.witness) return true;
  const Witness& w = *r.witness;
  auto fail = [&](const std::string& msg) {
    if (why) *why = r.property + ": " + msg;
    return false;
  };
  for (VertexId v : w.tuple) {
    if (v >= g.graph().vertex_count()) return fail("witness vertex out of range");
  }
  std::optional<Display> display;
  if (w.display == "thin-forward" || w.display == "thin-backward") {
    if (!members) return fail("thinness witness needs the candidate subspaces");
    auto D = r.constant("D");
    if (!D) return fail("thinness report without D");
    display = thin_display(cache, *members,
                           w.display == "thin-forward" ? ThinDirection::Forward : ThinDirection::Backward, *D);
  } else {
    display = display_by_name(w.display, cache, 8, r.theta);
  }
  if (!display) return fail("unknown display " + w.display);
  auto sample = replay_sample(*display, w);
  if (!sample) return fail("witness tuple no longer evaluates");
  Rational req = sample->at(w.multiplier);
  if (req != w.required) {
    std::ostringstream os;
    os << "requirement " << req << " differs from recorded " << w.required;
    return fail(os.str());
  }
  if (!(req > w.bound)) return fail("witness no longer exceeds its bound");
  return true;
}

}  // namespace

bool replay_witnesses(const Combing& g, const CertReport& report,
                      const std::vector<std::vector<VertexId>>* candidates, std::string* why) {
  PathCache cache(g);
  std::vector<std::vector<char>> members;
  if (candidates) members = membership(g.graph().vertex_count(), *candidates);
  return replay_one(g, report, cache, candidates ? &members : nullptr, why);
}

}  // namespace ccl
