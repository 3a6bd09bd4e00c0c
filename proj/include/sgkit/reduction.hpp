#pragma once

#include <string>
#include <vector>

#include "sgkit/graph.hpp"
#include "sgkit/oracle.hpp"

namespace sgkit {

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
};

/// 2-coloring by BFS; throws std::invalid_argument on an odd cycle.
Bipartition two_coloring(const Graph& g);

/// Throws std::invalid_argument unless every edge crosses the bipartition.
void validate_bipartition(const Graph& g, const Bipartition& b);

enum class Role { original, hub_x, hub_y, pendant };

struct VertexRole {
  Role role = Role::original;
  Vertex source = -1;  // the source vertex for original and pendant vertices
};

/// Dominating set instance (G, k) mapped to strong geodetic set instance (G', k + |V(G)|).
///
/// Layout of G': source vertices 0..n-1 keep their indices, then hub_x (adjacent
/// to every Y vertex), hub_y (adjacent to every X vertex), then one pendant per
/// source vertex in source order. A pendant of x in X hangs off hub_y and a
/// pendant of y in Y hangs off hub_x; hub_x ~ hub_y.
struct ReductionInstance {
  Graph source;
  Bipartition bipartition;
  int source_budget = 0;
  Graph target;
  int target_budget = 0;
  std::vector<VertexRole> roles;

  Vertex hub_x() const { return source.vertex_count(); }
  Vertex hub_y() const { return source.vertex_count() + 1; }
  Vertex pendant(Vertex v) const { return source.vertex_count() + 2 + v; }
  std::vector<int> target_sides() const;  // bipartition of G'

  // '#'-comment lines describing every target vertex.
  std::vector<std::string> role_comments() const;
};

ReductionInstance reduce(const Graph& g, const Bipartition& b, int k);

/// Certificate on the target built from a dominating set of the source: the
/// pendants plus D, with the covering geodesics routed through the hubs.
/// Throws std::invalid_argument if D does not dominate or a side of the
/// bipartition is empty.
Certificate forward_certificate(const ReductionInstance& inst, const std::vector<Vertex>& dominating);

struct EquivalenceReport {
  int domination_number = 0;
  int target_sg = 0;
  int source_vertices = 0;
  std::vector<int> disagreeing_budgets;  // k values where the two decisions differ

  bool holds() const { return disagreeing_budgets.empty(); }
};

/// For k = 0..k_max compares (gamma(G) <= k) with (sg(G') <= k + |V(G)|), both
/// sides computed exactly. The oracle vertex limit is raised to |V(G')|.
EquivalenceReport verify_equivalence(const Graph& g, const Bipartition& b, int k_max,
                                     OracleLimits limits = {});

}  // namespace sgkit
