#include "ccl/graph/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "ccl/core/error.hpp"

namespace ccl {

void write_graph(std::ostream& os, const MetricGraph& g) {
  os << "graph " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << "edge " << e.u << ' ' << e.v << ' ' << e.length.num() << '/' << e.length.den() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "label " << v << ' ' << g.label(v) << '\n';
}

std::string graph_to_string(const MetricGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

MetricGraph read_graph(std::istream& is, std::vector<std::string>* extra) {
  GraphBuilder b;
  bool header = false;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::FormatError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "graph") {
      std::size_t n = 0;
      if (header || !(ls >> n)) fail("bad graph header");
      for (std::size_t i = 0; i < n; ++i) b.add_vertex();
      header = true;
    } else if (kw == "edge") {
      VertexId u, v;
      std::string len;
      if (!header || !(ls >> u >> v >> len)) fail("bad edge line");
      try {
        b.add_edge(u, v, Rational::parse(len));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else if (kw == "label") {
      VertexId v;
      if (!header || !(ls >> v)) fail("bad label line");
      std::string rest;
      std::getline(ls >> std::ws, rest);
      if (v >= b.vertex_count()) fail("label for unknown vertex");
      b.set_label(v, rest);
    } else if (extra) {
      extra->push_back(line);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw Error(ErrorCode::FormatError, "missing graph header");
  return std::move(b).build();
}

MetricGraph graph_from_string(const std::string& text, std::vector<std::string>* extra) {
  std::istringstream is(text);
  return read_graph(is, extra);
}

}  // namespace ccl
