#pragma once

#include <memory>
#include <vector>

#include "ccl/group/cayley.hpp"

namespace ccl {

struct SpikeBasepoint {
  SpaceLabel point;
  Subgroup c;  // subgroup of the basepoint stabilizer; no generators = trivial
};

struct SpikeSpace {
  std::shared_ptr<const DistanceOracle> metric;
  std::size_t base_count = 0;  // X keeps ids 0..base_count-1
  struct Spike {
    std::size_t basepoint;  // index into the basepoint list
    VertexId attach;        // translated basepoint in X
    Element coset;          // canonical representative g of the coset gC
    VertexId tip;
  };
  std::vector<Spike> spikes;
};

// One spike per coset gC with g in the tabled ball such that g·x lies in the
// truncation, attached at g·x by an edge of length ell. Tip labels read
// "spike[i](g)".
SpikeSpace build_spike(const CayleySpace& x, const std::vector<SpikeBasepoint>& basepoints, Rational ell);

}  // namespace ccl
