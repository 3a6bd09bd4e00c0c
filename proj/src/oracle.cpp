#include "sgkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sgkit {

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* env = std::getenv("SGKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw std::invalid_argument("SGKIT_BUDGET must be a positive integer");
    }
    limits.node_budget = value;
  }
  return limits;
}

GeodesicTable::GeodesicTable(const Graph& g, std::size_t cap)
    : graph_(&g), dist_(all_pairs_distances(g)), cap_(cap) {
  const int n = g.vertex_count();
  paths_.assign(n, std::vector<std::vector<Geodesic>>(n));
  over_cap_.assign(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist_[u][v] == kUnreachable) continue;
      try {
        paths_[u][v] = enumerate_geodesics(g, u, v, cap);
      } catch (const GeodesicCapExceeded&) {
        over_cap_[u][v] = true;
      }
    }
  }
}

const std::vector<Geodesic>& GeodesicTable::geodesics(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (over_cap_[u][v]) {
    throw GeodesicCapExceeded("more than " + std::to_string(cap_) + " geodesics between " +
                              std::to_string(u) + " and " + std::to_string(v));
  }
  return paths_[u][v];
}

namespace {

using Mask = std::uint64_t;

Mask mask_of(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= Mask{1} << v;
  return m;
}

struct PairOptions {
  VertexPair pair;
  std::vector<Mask> masks;        // vertex set of each geodesic
  std::vector<std::size_t> index; // position in the table's geodesic list
};

// Branches on the uncovered vertex with the fewest covering options; each branch
// fixes one still-free pair to one geodesic through that vertex. Pairs left free at
// the end take their first geodesic.
class CoverSearch {
 public:
  CoverSearch(std::vector<PairOptions> pairs, Mask full, std::uint64_t budget)
      : pairs_(std::move(pairs)), full_(full), budget_(budget),
        assigned_(pairs_.size(), kFree) {}

  SetStatus run(Mask covered) {
    try {
      return descend(covered) ? SetStatus::feasible : SetStatus::infeasible;
    } catch (const BudgetExceeded&) {
      return SetStatus::budget_exceeded;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t choice(std::size_t p) const { return assigned_[p] == kFree ? 0 : assigned_[p]; }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool descend(Mask covered) {
    if (++nodes_ > budget_) throw BudgetExceeded("node budget exhausted");
    const Mask uncovered = full_ & ~covered;
    if (uncovered == 0) return true;

    // Bound: free pairs together can add at most the sum of their best gains.
    int reachable = 0;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (assigned_[p] != kFree) continue;
      int best = 0;
      for (Mask m : pairs_[p].masks) best = std::max(best, std::popcount(m & uncovered));
      reachable += best;
    }
    if (reachable < std::popcount(uncovered)) return false;

    int pick = -1;
    int pick_options = -1;
    for (Mask rest = uncovered; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      int options = 0;
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (assigned_[p] != kFree) continue;
        for (Mask m : pairs_[p].masks) options += (m >> v) & 1;
      }
      if (options == 0) return false;
      if (pick == -1 || options < pick_options) {
        pick = v;
        pick_options = options;
      }
    }

    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (assigned_[p] != kFree) continue;
      for (std::size_t g = 0; g < pairs_[p].masks.size(); ++g) {
        const Mask m = pairs_[p].masks[g];
        if (!((m >> pick) & 1)) continue;
        assigned_[p] = g;
        if (descend(covered | m)) return true;
        assigned_[p] = kFree;
      }
    }
    return false;
  }

  std::vector<PairOptions> pairs_;
  Mask full_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> assigned_;
};

void require_mask_capacity(const Graph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("oracle supports at most 64 vertices");
}

}  // namespace

SetCheck is_strong_geodetic_set(const GeodesicTable& table, std::span<const Vertex> set,
                                const OracleLimits& limits) {
  const Graph& g = table.graph();
  require_mask_capacity(g);
  const int n = g.vertex_count();
  std::vector<Vertex> members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw std::invalid_argument("set vertex out of range");
  }

  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask covered = mask_of(members);
  Mask reachable = covered;
  std::vector<PairOptions> free_pairs;
  std::vector<std::pair<VertexPair, std::size_t>> forced;

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex a = members[i];
      const Vertex b = members[j];
      if (!table.connected(a, b)) continue;
      const auto& paths = table.geodesics(a, b);
      if (paths.size() == 1) {
        // Includes every adjacent pair: its only geodesic is the edge.
        const Mask m = mask_of(paths.front().vertices);
        covered |= m;
        reachable |= m;
        forced.emplace_back(VertexPair{a, b}, 0);
        continue;
      }
      PairOptions opt{{a, b}, {}, {}};
      for (std::size_t k = 0; k < paths.size(); ++k) {
        opt.masks.push_back(mask_of(paths[k].vertices));
        opt.index.push_back(k);
        reachable |= opt.masks.back();
      }
      free_pairs.push_back(std::move(opt));
    }
  }

  SetCheck result;
  if ((reachable & full) != full) return result;

  // Fewest geodesics first keeps branching order stable and narrow.
  std::stable_sort(free_pairs.begin(), free_pairs.end(),
                   [](const PairOptions& x, const PairOptions& y) {
                     return x.masks.size() < y.masks.size();
                   });
  CoverSearch search(free_pairs, full, limits.node_budget);
  result.status = search.run(covered);
  result.nodes = search.nodes();
  if (result.status != SetStatus::feasible) return result;

  Certificate cert;
  cert.set = members;
  for (const auto& [key, k] : forced) {
    cert.chosen.emplace(key, table.geodesics(key.first, key.second)[k]);
  }
  for (std::size_t p = 0; p < free_pairs.size(); ++p) {
    const auto& opt = free_pairs[p];
    cert.chosen.emplace(opt.pair, table.geodesics(opt.pair.first, opt.pair.second)
                                      [opt.index[search.choice(p)]]);
  }
  result.certificate = std::move(cert);
  return result;
}

SetCheck is_strong_geodetic_set(const Graph& g, std::span<const Vertex> set,
                                const OracleLimits& limits) {
  const GeodesicTable table(g, limits.geodesic_cap);
  return is_strong_geodetic_set(table, set, limits);
}

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_simplicial(v)) out.push_back(v);
  }
  return out;
}

namespace {

// Calls visit(combination) for every k-subset of `pool` in lexicographic order;
// stops early when visit returns true.
template <class Visit>
bool for_each_combination(const std::vector<Vertex>& pool, int k, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> chosen(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (visit(chosen)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ExactResult strong_geodetic_number_exact(const Graph& g, const OracleLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices) {
    throw std::invalid_argument("graph has " + std::to_string(n) + " vertices; oracle limit is " +
                                std::to_string(limits.max_vertices));
  }
  require_mask_capacity(g);
  const GeodesicTable table(g, limits.geodesic_cap);
  const auto forced = simplicial_vertices(g);
  std::vector<Vertex> optional;
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(forced.begin(), forced.end(), v)) optional.push_back(v);
  }

  ExactResult result;
  for (int extra = 0; extra <= static_cast<int>(optional.size()); ++extra) {
    bool indeterminate = false;
    std::optional<Certificate> found;
    for_each_combination(optional, extra, [&](const std::vector<Vertex>& pick) {
      std::vector<Vertex> candidate = forced;
      candidate.insert(candidate.end(), pick.begin(), pick.end());
      std::sort(candidate.begin(), candidate.end());
      ++result.sets_checked;
      auto check = is_strong_geodetic_set(table, candidate, limits);
      if (check.status == SetStatus::budget_exceeded) {
        indeterminate = true;
        return false;
      }
      if (check.status == SetStatus::feasible) {
        found = std::move(check.certificate);
        return true;
      }
      return false;
    });
    if (found) {
      result.value = static_cast<int>(found->set.size());
      result.certificate = std::move(*found);
      return result;
    }
    if (indeterminate) {
      throw BudgetExceeded("node budget exhausted at set size " +
                           std::to_string(forced.size() + extra) + "; minimum not certified");
    }
  }
  // S = V is always feasible, so the loop returns before this point.
  throw std::logic_error("no strong geodetic set found");
}

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
  std::vector<bool> dominated(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : set) {
    dominated.at(v) = true;
    for (Vertex w : g.neighbors(v)) dominated[w] = true;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
}

int dominating_number_exact(const Graph& g, const OracleLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices + 4) {
    throw std::invalid_argument("graph too large for exhaustive domination search");
  }
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  for (int k = 1; k <= n; ++k) {
    if (for_each_combination(all, k, [&](const std::vector<Vertex>& s) {
          return is_dominating_set(g, s);
        })) {
      return k;
    }
  }
  return n;
}

}  // namespace sgkit
