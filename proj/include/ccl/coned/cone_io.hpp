#pragma once

#include <iosfwd>
#include <string>

#include "ccl/coned/coned_space.hpp"

namespace ccl {

// The base graph in the graph interchange format, followed by
//   cone <label> <graph|spherical> <D|auto>
//   attach <label> <vertex>
void write_cone_spec(std::ostream& os, const ConeSpec& spec);
std::string cone_spec_to_string(const ConeSpec& spec);
ConeSpec cone_spec_from_string(const std::string& text);

}  // namespace ccl
