#include "sgkit/reduction.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sgkit {

Bipartition two_coloring(const Graph& g) {
  Bipartition b;
  b.side.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (b.side[s] != -1) continue;
    b.side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (b.side[w] == -1) {
          b.side[w] = 1 - b.side[u];
          queue.push_back(w);
        } else if (b.side[w] == b.side[u]) {
          throw std::invalid_argument("graph is not bipartite (odd cycle through vertex " +
                                      std::to_string(w + 1) + ")");
        }
      }
    }
  }
  return b;
}

void validate_bipartition(const Graph& g, const Bipartition& b) {
  if (b.side.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("bipartition size does not match the graph");
  }
  for (int s : b.side) {
    if (s != 0 && s != 1) throw std::invalid_argument("bipartition sides must be 0 or 1");
  }
  for (const auto& [u, v] : g.edges()) {
    if (b.side[u] == b.side[v]) {
      throw std::invalid_argument("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                                  " lies inside one side");
    }
  }
}

std::vector<int> ReductionInstance::target_sides() const {
  std::vector<int> sides = bipartition.side;
  sides.push_back(0);  // hub_x
  sides.push_back(1);  // hub_y
  sides.insert(sides.end(), bipartition.side.begin(), bipartition.side.end());
  return sides;
}

std::vector<std::string> ReductionInstance::role_comments() const {
  std::vector<std::string> out;
  out.push_back("reduction: dominating set budget " + std::to_string(source_budget) +
                " -> strong geodetic budget " + std::to_string(target_budget));
  for (Vertex v = 0; v < target.vertex_count(); ++v) {
    const auto& r = roles[v];
    std::string line = "role " + std::to_string(v + 1) + ' ';
    switch (r.role) {
      case Role::original: line += "original " + std::to_string(r.source + 1); break;
      case Role::hub_x: line += "hub_x"; break;
      case Role::hub_y: line += "hub_y"; break;
      case Role::pendant: line += "pendant " + std::to_string(r.source + 1); break;
    }
    out.push_back(std::move(line));
  }
  return out;
}

ReductionInstance reduce(const Graph& g, const Bipartition& b, int k) {
  validate_bipartition(g, b);
  if (k < 0) throw std::invalid_argument("budget must be nonnegative");
  const int n = g.vertex_count();
  ReductionInstance inst{g, b, k, Graph(2 * n + 2), k + n, {}};
  for (const auto& [u, v] : g.edges()) inst.target.add_edge(u, v);
  inst.target.add_edge(inst.hub_x(), inst.hub_y());
  for (Vertex v = 0; v < n; ++v) {
    // X vertices and their pendants hang off hub_y; Y vertices off hub_x.
    const Vertex hub = b.side[v] == 0 ? inst.hub_y() : inst.hub_x();
    inst.target.add_edge(v, hub);
    inst.target.add_edge(hub, inst.pendant(v));
  }
  inst.roles.resize(static_cast<std::size_t>(2 * n + 2));
  for (Vertex v = 0; v < n; ++v) {
    inst.roles[v] = {Role::original, v};
    inst.roles[inst.pendant(v)] = {Role::pendant, v};
  }
  inst.roles[inst.hub_x()] = {Role::hub_x, -1};
  inst.roles[inst.hub_y()] = {Role::hub_y, -1};
  return inst;
}

Certificate forward_certificate(const ReductionInstance& inst,
                                const std::vector<Vertex>& dominating) {
  const Graph& g = inst.source;
  const auto& side = inst.bipartition.side;
  const int n = g.vertex_count();
  if (!is_dominating_set(g, dominating)) throw std::invalid_argument("set is not dominating");
  std::vector<Vertex> in_x;
  std::vector<Vertex> in_y;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? in_x : in_y).push_back(v);
  if (in_x.empty() || in_y.empty()) {
    throw std::invalid_argument("both sides of the bipartition must be nonempty");
  }

  std::vector<Vertex> d = dominating;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());

  Certificate cert;
  cert.set = d;
  for (Vertex v = 0; v < n; ++v) cert.set.push_back(inst.pendant(v));
  std::sort(cert.set.begin(), cert.set.end());

  auto fix = [&](std::vector<Vertex> path) {
    const VertexPair key = make_pair_key(path.front(), path.back());
    cert.chosen.emplace(key, Geodesic{std::move(path)});
  };

  // Each dominator reaches the pendant of every neighbor through that neighbor.
  for (Vertex a : d) {
    const Vertex hub = side[a] == 0 ? inst.hub_x() : inst.hub_y();
    for (Vertex b : g.neighbors(a)) fix({a, b, hub, inst.pendant(b)});
  }

  // Hubs: through a dominator's own pendant when available, otherwise along the
  // pendant-hub-hub-pendant path, which covers both hubs at once.
  const auto x_dom = std::find_if(d.begin(), d.end(), [&](Vertex v) { return side[v] == 0; });
  const auto y_dom = std::find_if(d.begin(), d.end(), [&](Vertex v) { return side[v] == 1; });
  if (x_dom != d.end()) fix({*x_dom, inst.hub_y(), inst.pendant(*x_dom)});
  if (y_dom != d.end()) fix({*y_dom, inst.hub_x(), inst.pendant(*y_dom)});
  if (x_dom == d.end() || y_dom == d.end()) {
    fix({inst.pendant(in_x.front()), inst.hub_y(), inst.hub_x(), inst.pendant(in_y.front())});
  }

  for (std::size_t i = 0; i < cert.set.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.set.size(); ++j) {
      const VertexPair key{cert.set[i], cert.set[j]};
      if (!cert.chosen.contains(key)) {
        cert.chosen.emplace(key, first_geodesic(inst.target, key.first, key.second));
      }
    }
  }
  return cert;
}

EquivalenceReport verify_equivalence(const Graph& g, const Bipartition& b, int k_max,
                                     OracleLimits limits) {
  const auto inst = reduce(g, b, 0);
  limits.max_vertices = std::max(limits.max_vertices, inst.target.vertex_count());
  EquivalenceReport report;
  report.source_vertices = g.vertex_count();
  report.domination_number = dominating_number_exact(g, limits);
  report.target_sg = strong_geodetic_number_exact(inst.target, limits).value;
  for (int k = 0; k <= k_max; ++k) {
    const bool dominates = report.domination_number <= k;
    const bool covers = report.target_sg <= k + report.source_vertices;
    if (dominates != covers) report.disagreeing_budgets.push_back(k);
  }
  return report;
}

}  // namespace sgkit
