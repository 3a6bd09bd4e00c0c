#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgkit/graph.hpp"

namespace sgkit {

/// Limits for the exhaustive oracle. The node budget applies per candidate set.
struct OracleLimits {
  int max_vertices = 12;
  std::size_t geodesic_cap = 64;
  std::uint64_t node_budget = 20'000'000;

  // Applies SGKIT_BUDGET from the environment, if set, to node_budget.
  // Throws std::invalid_argument unless it is a positive integer.
  static OracleLimits from_environment();
};

class BudgetExceeded : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

enum class SetStatus { feasible, infeasible, budget_exceeded };

struct SetCheck {
  SetStatus status = SetStatus::infeasible;
  std::optional<Certificate> certificate;  // present iff feasible
  std::uint64_t nodes = 0;
};

/// Precomputed geodesics of every connected pair, shared by many set checks on one graph.
class GeodesicTable {
 public:
  GeodesicTable(const Graph& g, std::size_t cap);

  const Graph& graph() const { return *graph_; }
  bool connected(Vertex u, Vertex v) const { return dist_[u][v] != kUnreachable; }
  // Throws GeodesicCapExceeded if the pair has more than `cap` geodesics.
  const std::vector<Geodesic>& geodesics(Vertex u, Vertex v) const;

 private:
  const Graph* graph_;
  DistanceMatrix dist_;
  std::vector<std::vector<std::vector<Geodesic>>> paths_;  // [min][max]
  std::vector<std::vector<bool>> over_cap_;
  std::size_t cap_;
};

/// Decides whether one geodesic per pair of `set` can cover V(G).
SetCheck is_strong_geodetic_set(const GeodesicTable& table, std::span<const Vertex> set,
                                const OracleLimits& limits);
SetCheck is_strong_geodetic_set(const Graph& g, std::span<const Vertex> set,
                                const OracleLimits& limits = {});

struct ExactResult {
  int value = 0;
  Certificate certificate;
  std::uint64_t sets_checked = 0;
};

/// Minimum strong geodetic set by increasing size, every simplicial vertex forced in.
/// Throws BudgetExceeded / GeodesicCapExceeded when the answer cannot be certified,
/// and std::invalid_argument if the graph exceeds limits.max_vertices.
ExactResult strong_geodetic_number_exact(const Graph& g, const OracleLimits& limits = {});

std::vector<Vertex> simplicial_vertices(const Graph& g);

/// Domination number by exhaustive search over subsets in increasing size.
/// Accepts up to limits.max_vertices + 4 vertices.
int dominating_number_exact(const Graph& g, const OracleLimits& limits = {});

bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

}  // namespace sgkit
