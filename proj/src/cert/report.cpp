#include "ccl/cert/report.hpp"

#include <json.hpp>

#include "ccl/core/error.hpp"

namespace ccl {

namespace {

using nlohmann::json;

json to_json(const CertReport& r, const MetricGraph& g) {
  json j;
  j["property"] = r.property;
  json profile = json::object();
  for (const auto& [k, v] : r.profile) profile[k] = v.str();
  j["profile"] = profile;
  if (r.theta) j["theta"] = r.theta->str();
  j["verdict"] = r.certified ? "certified" : "violated";
  if (r.witness) {
    const Witness& w = *r.witness;
    json jw;
    jw["display"] = w.display;
    json labels = json::array(), ids = json::array(), params = json::array();
    for (VertexId v : w.tuple) {
      labels.push_back(g.label(v));
      ids.push_back(v);
    }
    for (const auto& p : w.params) params.push_back(p.str());
    jw["labels"] = labels;
    jw["vertices"] = ids;
    jw["params"] = params;
    jw["sample"] = w.sample;
    jw["channel"] = w.channel;
    jw["multiplier"] = w.multiplier.str();
    jw["lhs"] = w.lhs.str();
    jw["m"] = w.m.str();
    jw["inv"] = w.inv.str();
    jw["required"] = w.required.str();
    jw["bound"] = w.bound.str();
    jw["text"] = r.witness_text;
    j["witness"] = jw;
  }
  json samples;
  samples["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  samples["tuples"] = r.tuples;
  samples["evaluations"] = r.evaluations;
  samples["skipped"] = r.skipped;
  j["samples"] = samples;
  j["seed"] = r.seed;
  j["core_radius"] = r.core_radius;
  if (!r.sweep_axis.empty()) {
    json rows = json::array();
    for (const auto& [e, c] : r.sweep) rows.push_back(json::array({e.str(), c.str()}));
    j["sweep"] = {{"axis", r.sweep_axis}, {"rows", rows}};
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.parts.empty()) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p, g));
    j["parts"] = parts;
  }
  return j;
}

Rational rat(const json& j) { return Rational::parse(j.get<std::string>()); }

Theta parse_theta(const std::string& s) {
  if (s == "identity") return Theta::identity();
  auto inner = [&](std::size_t skip) { return s.substr(skip, s.size() - skip - 1); };
  if (s.rfind("affine(", 0) == 0) {
    std::string body = inner(7);
    auto comma = body.find(',');
    return Theta::affine(Rational::parse(body.substr(0, comma)), Rational::parse(body.substr(comma + 1)));
  }
  if (s.rfind("steps(", 0) == 0) {
    std::string body = inner(6);
    std::vector<std::pair<Rational, Rational>> steps;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto end = body.find(';', pos);
      std::string item = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      auto colon = item.find(':');
      steps.emplace_back(Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1)));
      if (end == std::string::npos) break;
      pos = end + 1;
    }
    return Theta::step_table(std::move(steps));
  }
  throw Error(ErrorCode::FormatError, "unknown theta '" + s + "'");
}

CertReport from_json(const json& j) {
  CertReport r;
  r.property = j.at("property").get<std::string>();
  for (const auto& [k, v] : j.at("profile").items()) r.profile.emplace_back(k, rat(v));
  if (j.contains("theta")) r.theta = parse_theta(j["theta"].get<std::string>());
  r.certified = j.at("verdict").get<std::string>() == "certified";
  if (j.contains("witness")) {
    const json& jw = j["witness"];
    Witness w;
    w.display = jw.at("display").get<std::string>();
    for (const auto& v : jw.at("vertices")) w.tuple.push_back(v.get<VertexId>());
    for (const auto& p : jw.at("params")) w.params.push_back(rat(p));
    w.sample = jw.at("sample").get<std::size_t>();
    w.channel = jw.at("channel").get<std::size_t>();
    w.multiplier = rat(jw.at("multiplier"));
    w.lhs = rat(jw.at("lhs"));
    w.m = rat(jw.at("m"));
    w.inv = rat(jw.at("inv"));
    w.required = rat(jw.at("required"));
    w.bound = rat(jw.at("bound"));
    r.witness_text = jw.at("text").get<std::string>();
    r.witness = w;
  }
  const json& s = j.at("samples");
  r.exhaustive = s.at("mode").get<std::string>() == "exhaustive";
  r.tuples = s.at("tuples").get<std::uint64_t>();
  r.evaluations = s.at("evaluations").get<std::uint64_t>();
  r.skipped = s.at("skipped").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.core_radius = j.at("core_radius").get<int>();
  if (j.contains("sweep")) {
    r.sweep_axis = j["sweep"].at("axis").get<std::string>();
    for (const auto& row : j["sweep"].at("rows")) r.sweep.emplace_back(rat(row.at(0)), rat(row.at(1)));
  }
  if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  if (j.contains("parts")) {
    for (const auto& p : j["parts"]) r.parts.push_back(from_json(p));
  }
  return r;
}

}  // namespace

std::string report_to_json(const CertReport& r, const MetricGraph& g, int indent) {
  return to_json(r, g).dump(indent);
}

CertReport report_from_json(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, e.what());
  }
}

std::vector<std::string> sweep_csv_rows(const std::string& fixture, const CertReport& r) {
  std::vector<std::string> rows;
  for (const auto& [e, c] : r.sweep) rows.push_back(fixture + "," + r.property + "," + e.str() + "," + c.str());
  for (const auto& p : r.parts) {
    auto sub = sweep_csv_rows(fixture, p);
    rows.insert(rows.end(), sub.begin(), sub.end());
  }
  return rows;
}

}  // namespace ccl
