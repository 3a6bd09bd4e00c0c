#include "sgkit/report.hpp"

#include <stdexcept>

namespace sgkit {

NLOHMANN_JSON_SERIALIZE_ENUM(Method, {
                                         {Method::scan, "scan"},
                                         {Method::classification, "classification"},
                                         {Method::multipartite, "multipartite"},
                                         {Method::oracle, "oracle"},
                                         {Method::bounds, "bounds"},
                                     })

std::string to_string(Method m) { return nlohmann::json(m).get<std::string>(); }

void to_json(nlohmann::json& j, const Certificate& c) {
  auto set = nlohmann::json::array();
  for (Vertex v : c.set) set.push_back(v + 1);
  auto paths = nlohmann::json::array();
  for (const auto& [pair, path] : c.chosen) {
    auto p = nlohmann::json::array();
    for (Vertex v : path.vertices) p.push_back(v + 1);
    paths.push_back(std::move(p));
  }
  j = {{"set", std::move(set)}, {"paths", std::move(paths)}};
}

void from_json(const nlohmann::json& j, Certificate& c) {
  c = {};
  for (int v : j.at("set")) c.set.push_back(v - 1);
  for (const auto& p : j.at("paths")) {
    Geodesic g;
    for (int v : p) g.vertices.push_back(v - 1);
    if (g.vertices.empty()) throw std::invalid_argument("empty path in certificate");
    c.chosen.emplace(make_pair_key(g.front(), g.back()), std::move(g));
  }
}

void to_json(nlohmann::json& j, const SolveReport& r) {
  j = nlohmann::json::object();
  j["method"] = r.method;
  j["input"] = r.input;
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  if (r.selection) j["selection"] = *r.selection;
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.bounds) {
    j["bounds"] = {{"lp_lower", r.bounds->lp_lower},
                   {"whole_parts_upper", r.bounds->whole_parts_upper}};
  }
  j["meta"] = r.meta;
}

void from_json(const nlohmann::json& j, SolveReport& r) {
  r = {};
  r.method = j.at("method").get<Method>();
  if (!j.at("method").is_string() || to_string(r.method) != j.at("method").get<std::string>()) {
    throw std::invalid_argument("unknown method tag");
  }
  r.input = j.at("input");
  if (!j.at("k").is_null()) r.k = j.at("k").get<long long>();
  if (j.contains("selection")) r.selection = j.at("selection").get<std::vector<long long>>();
  if (j.contains("certificate")) r.certificate = j.at("certificate").get<Certificate>();
  if (j.contains("bounds")) {
    const auto& b = j.at("bounds");
    r.bounds = ReportBounds{b.at("lp_lower").get<int>(), b.at("whole_parts_upper").get<int>()};
  }
  r.meta = j.value("meta", nlohmann::json::object());
}

std::string emit_json(const SolveReport& r) { return nlohmann::json(r).dump() + '\n'; }

SolveReport parse_report(const std::string& text) {
  return nlohmann::json::parse(text).get<SolveReport>();
}

}  // namespace sgkit
