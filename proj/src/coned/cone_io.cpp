#include "ccl/coned/cone_io.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "ccl/core/error.hpp"
#include "ccl/graph/graph_io.hpp"

namespace ccl {

void write_cone_spec(std::ostream& os, const ConeSpec& spec) {
  write_graph(os, spec.base->graph());
  for (const auto& c : spec.cones)
    os << "cone " << c.name << ' ' << (c.metric == ConeMetric::Graph ? "graph" : "spherical") << ' '
       << (c.D ? c.D->str() : std::string("auto")) << '\n';
  for (const auto& c : spec.cones)
    for (VertexId v : c.attachments) os << "attach " << c.name << ' ' << v << '\n';
}

std::string cone_spec_to_string(const ConeSpec& spec) {
  std::ostringstream os;
  write_cone_spec(os, spec);
  return os.str();
}

ConeSpec cone_spec_from_string(const std::string& text) {
  std::vector<std::string> extra;
  ConeSpec out;
  out.base = make_metric(graph_from_string(text, &extra));
  std::map<std::string, std::size_t> index;
  for (const auto& line : extra) {
    std::istringstream ls(line);
    std::string kw, name;
    ls >> kw >> name;
    if (kw == "cone") {
      std::string metric, D;
      if (!(ls >> metric >> D) || index.count(name)) throw Error(ErrorCode::FormatError, "bad cone line: " + line);
      ConeLabel c;
      c.name = name;
      if (metric == "graph") {
        c.metric = ConeMetric::Graph;
      } else if (metric == "spherical") {
        c.metric = ConeMetric::Spherical;
      } else {
        throw Error(ErrorCode::FormatError, "unknown cone metric: " + metric);
      }
      if (D != "auto") {
        try {
          c.D = Rational::parse(D);
        } catch (const std::invalid_argument& e) {
          throw Error(ErrorCode::FormatError, e.what());
        }
      }
      index[name] = out.cones.size();
      out.cones.push_back(std::move(c));
    } else if (kw == "attach") {
      VertexId v;
      auto it = index.find(name);
      if (it == index.end() || !(ls >> v)) throw Error(ErrorCode::FormatError, "bad attach line: " + line);
      if (v >= out.base->graph().vertex_count()) throw Error(ErrorCode::FormatError, "attach to unknown vertex");
      out.cones[it->second].attachments.push_back(v);
    } else {
      throw Error(ErrorCode::FormatError, "unknown keyword '" + kw + "'");
    }
  }
  return out;
}

}  // namespace ccl
