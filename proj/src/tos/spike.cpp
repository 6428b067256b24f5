#include "ccl/tos/spike.hpp"

#include <map>
#include <unordered_set>

#include "ccl/core/error.hpp"
#include "ccl/graph/combing.hpp"

namespace ccl {

SpikeSpace build_spike(const CayleySpace& x, const std::vector<SpikeBasepoint>& basepoints, Rational ell) {
  if (ell.sign() <= 0) throw Error(ErrorCode::ParameterOutOfRange, "spike length must be positive");
  const Group& group = *x.group;
  const MetricGraph& g = x.graph();
  GraphBuilder b;
  for (VertexId v = 0; v < g.vertex_count(); ++v) b.add_vertex(g.label(v));
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v, e.length);
  SpikeSpace out;
  out.base_count = g.vertex_count();
  auto elements = element_ball(group, x.generators, x.radius);
  for (std::size_t i = 0; i < basepoints.size(); ++i) {
    const auto& bp = basepoints[i];
    auto base = x.find(bp.point);
    if (!base) throw Error(ErrorCode::ElementOutsideBall, "basepoint " + x.describe(bp.point));
    GenMask mask = group.mask(bp.c);
    for (std::size_t j = 0; j < mask.size(); ++j)
      if (mask[j] && x.act(group.generator(j), *base) != base)
        throw Error(ErrorCode::BasepointNotFixed,
                    group.generator_names()[j] + " moves " + x.describe(bp.point));
    std::unordered_set<Element, ElementHash> seen;
    for (const auto& elem : elements) {
      auto p = x.find(x.translate(elem, bp.point));
      if (!p) continue;
      Element rep = group.coset_rep(mask, elem);
      if (!seen.insert(rep).second) continue;
      VertexId tip = b.add_vertex("spike[" + std::to_string(i) + "](" + group.format(rep) + ")");
      b.add_edge(*p, tip, ell);
      out.spikes.push_back({i, *p, rep, tip});
    }
  }
  out.metric = make_metric(std::move(b).build());
  return out;
}

}  // namespace ccl
