#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgkit/graph.hpp"

namespace sgkit {

/// Chosen-vertex count per part, aligned with Partition::parts().
struct Selection {
  std::vector<int> counts;

  int total() const;
  friend bool operator==(const Selection&, const Selection&) = default;
  friend auto operator<=>(const Selection&, const Selection&) = default;
};

/// Throws std::invalid_argument unless sel has one count in [0, n_p] per part.
void validate_selection(const Partition& p, const Selection& sel);

/// At most two parts are partially selected.
bool is_normal_form(const Partition& p, const Selection& sel);

/// Counting criterion. With P = sum C(s_p,2) usable pairs and U_p = n_p - s_p:
/// feasible iff sum U_p <= P and U_p <= P - C(s_p,2) for every part.
/// A single part (edgeless graph) is feasible only when fully selected.
bool coverage_feasible(const Partition& p, const Selection& sel);

/// Same decision by an explicit maximum matching of uncovered vertices to
/// same-part pairs of other parts.
bool coverage_feasible_matching(const Partition& p, const Selection& sel);

/// The first s_p vertices of every block.
std::vector<Vertex> selection_vertices(const Partition& p, const Selection& sel);

/// Explicit certificate on build_complete_multipartite(p); throws
/// std::invalid_argument if the selection does not cover.
Certificate selection_certificate(const Partition& p, const Selection& sel);

struct MultipartiteResult {
  int k = 0;
  Selection selection;
  std::uint64_t configurations = 0;  // deduplicated configurations examined
};

inline constexpr std::uint64_t kMultipartiteConfigBudget = std::uint64_t{1} << 22;

/// Minimum over normal-form selections. Parts of equal size are interchangeable,
/// so configurations are enumerated over size multiplicities; throws
/// ResourceLimitError when their count exceeds kMultipartiteConfigBudget.
/// Among optimal selections the lexicographically smallest is returned.
MultipartiteResult sg_multipartite(const Partition& p);

/// Straight enumeration over part pairs {i,j}, subsets R of the other parts and
/// (s_i, s_j), without symmetry reduction. Limited to 16 parts.
int sg_multipartite_direct(const Partition& p);

enum class LevelRule {
  covering_capacity,  // C(k+1,2) m_k + ... + C(l+2,2) m_{l+1} <= n
  residual_balance,   // l m_l + ... + 1 m_1 >= C(k,2) m_k + ... + C(l+1,2) m_{l+1}
};

/// The level l at which the greedy relaxation optimum switches to a fractional part.
int relaxation_level(const Partition& p, LevelRule rule = LevelRule::residual_balance);

struct RelaxationBound {
  int value = 0;
  int level = 0;
  bool clamped = false;  // the fractional count had to be clamped into [0, m_l]
};

/// Ceiling of the greedy optimum of the fractional covering relaxation.
RelaxationBound lp_lower_bound(const Partition& p);

struct WholePartsBound {
  int value = 0;
  Selection selection;
  bool exhaustive = false;  // false: greedy only (configuration budget exceeded)
};

/// Smallest strong geodetic set made of whole parts only.
WholePartsBound whole_parts_upper_bound(const Partition& p);

/// 2mk/(k+1) for m parts of size k; requires (k+1) | 2m.
int sg_uniform(int part_size, int part_count);

struct MultipartiteBounds {
  int lp_lower = 0;
  int whole_parts_upper = 0;
  std::optional<int> exact;
};

MultipartiteBounds multipartite_bounds(const Partition& p, bool with_exact);

}  // namespace sgkit
