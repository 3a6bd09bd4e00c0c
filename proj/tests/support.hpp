#pragma once

// Independent reference implementations and graph generators for tests.
// Nothing here calls into the solver code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "sgkit/graph.hpp"

namespace sgkit::testing {

inline long long choose2(long long s) { return s < 2 ? 0 : s * (s - 1) / 2; }

// min s1 + s2 subject to C(s2,2) >= n - s1 and C(s1,2) >= m - s2, by full double loop.
inline long long brute_sg_bipartite(long long n, long long m) {
  long long best = n + m;
  for (long long s1 = 0; s1 <= n; ++s1) {
    for (long long s2 = 0; s2 <= m; ++s2) {
      if (choose2(s2) >= n - s1 && choose2(s1) >= m - s2) best = std::min(best, s1 + s2);
    }
  }
  return best;
}

// All partitions of n as nonincreasing lists.
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int s = std::min(left, cap); s >= 1; --s) {
      current.push_back(s);
      rec(left - s, s);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Every count vector with 0 <= c_p <= parts[p].
inline std::vector<std::vector<int>> all_selections(const std::vector<int>& parts) {
  std::vector<std::vector<int>> out{{}};
  for (int size : parts) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int c = 0; c <= size; ++c) {
        auto v = prefix;
        v.push_back(c);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Coverage decided by Hall's condition over every subset of uncovered vertices:
// an uncovered vertex of part p can use any same-part pair of S outside p.
inline bool hall_coverage(const std::vector<int>& parts, const std::vector<int>& counts) {
  const int r = static_cast<int>(parts.size());
  if (r == 1) return counts[0] == parts[0];
  std::vector<int> uncovered_part;
  for (int p = 0; p < r; ++p) uncovered_part.insert(uncovered_part.end(), parts[p] - counts[p], p);
  const int u = static_cast<int>(uncovered_part.size());
  if (u > 20) return false;
  for (std::uint32_t mask = 1; mask < (1u << u); ++mask) {
    std::vector<bool> used_part(r, false);
    int size = 0;
    for (int i = 0; i < u; ++i) {
      if (mask >> i & 1) {
        used_part[uncovered_part[i]] = true;
        ++size;
      }
    }
    long long neighbors = 0;
    int distinct = 0;
    for (int p = 0; p < r; ++p) distinct += used_part[p];
    for (int q = 0; q < r; ++q) {
      // Pairs of part q help unless every vertex in the subset is from q itself.
      if (distinct == 1 && used_part[q]) continue;
      neighbors += choose2(counts[q]);
    }
    if (neighbors < size) return false;
  }
  return true;
}

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

// Side per vertex, or empty if some edge joins equal colors (checked over all 2^n colorings).
inline std::vector<int> brute_bipartition(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if ((mask >> u & 1) == (mask >> v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> side(n);
      for (int v = 0; v < n; ++v) side[v] = mask >> v & 1;
      return side;
    }
  }
  return {};
}

// Every connected bipartite labelled graph on n vertices (2 <= n <= 6).
inline std::vector<Graph> connected_bipartite_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    }
    if (is_connected(g) && !brute_bipartition(g).empty()) out.push_back(std::move(g));
  }
  return out;
}

// Connected bipartite graph: random sides, random spanning tree across them, extra cross edges.
inline Graph random_connected_bipartite(int n, std::mt19937& rng) {
  std::vector<int> side(n);
  std::bernoulli_distribution coin(0.5);
  do {
    for (auto& s : side) s = coin(rng);
  } while (std::count(side.begin(), side.end(), 0) == 0 || std::count(side.begin(), side.end(), 1) == 0);
  for (;;) {
    Graph g(n);
    std::bernoulli_distribution extra(0.4);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (side[u] != side[v] && extra(rng)) g.add_edge(u, v);
      }
    }
    if (is_connected(g)) return g;
  }
}

// Partition of a random total in [1, max_total] into random parts.
inline std::vector<int> random_partition(int max_total, std::mt19937& rng) {
  const int total = std::uniform_int_distribution<int>(1, max_total)(rng);
  std::vector<int> parts;
  int left = total;
  while (left > 0) {
    const int s = std::uniform_int_distribution<int>(1, std::min(left, 1 + total / 3))(rng);
    parts.push_back(s);
    left -= s;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

}  // namespace sgkit::testing
