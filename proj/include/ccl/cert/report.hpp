#pragma once

#include <string>
#include <vector>

#include "ccl/cert/checks.hpp"

namespace ccl {

// JSON text with sorted keys and rationals as "p/q" strings, so equal reports
// give equal bytes.
std::string report_to_json(const CertReport& r, const MetricGraph& g, int indent = 2);
CertReport report_from_json(const std::string& text);

// "fixture,property,E,C_min" rows for every swept report in the tree
std::vector<std::string> sweep_csv_rows(const std::string& fixture, const CertReport& r);
inline const char* sweep_csv_header() { return "fixture,property,E,C_min"; }

}  // namespace ccl
