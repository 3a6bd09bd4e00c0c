#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgkit/graph.hpp"

namespace sgkit {

enum class Method { scan, classification, multipartite, oracle, bounds };

std::string to_string(Method m);

struct ReportBounds {
  int lp_lower = 0;
  int whole_parts_upper = 0;

  friend bool operator==(const ReportBounds&, const ReportBounds&) = default;
};

/// Result of one solve command, in the shape emitted by --json:
///   {method, input, k, selection?, certificate?, bounds?, meta}
/// Certificate vertices are 1-based in JSON and 0-based in memory.
struct SolveReport {
  Method method = Method::scan;
  nlohmann::json input = nlohmann::json::object();
  std::optional<long long> k;
  std::optional<std::vector<long long>> selection;
  std::optional<Certificate> certificate;
  std::optional<ReportBounds> bounds;
  nlohmann::json meta = nlohmann::json::object();

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

void to_json(nlohmann::json& j, const SolveReport& r);
void from_json(const nlohmann::json& j, SolveReport& r);

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

/// Compact single-line JSON with a trailing newline.
std::string emit_json(const SolveReport& r);
SolveReport parse_report(const std::string& text);

}  // namespace sgkit
