#pragma once

#include <iosfwd>
#include <string>

#include "ccl/graph/metric_graph.hpp"

namespace ccl {

// Line format:
//   graph <n>
//   edge <u> <v> <num>/<den>     (in edge-id order)
//   label <id> <string>
// Blank lines and lines starting with '#' are ignored on input. Unknown
// keywords are left to the caller through `extra`.
void write_graph(std::ostream& os, const MetricGraph& g);
std::string graph_to_string(const MetricGraph& g);
MetricGraph read_graph(std::istream& is, std::vector<std::string>* extra = nullptr);
MetricGraph graph_from_string(const std::string& text, std::vector<std::string>* extra = nullptr);

}  // namespace ccl
