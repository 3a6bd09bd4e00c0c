#include "sgkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace sgkit {

Graph::Graph(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_simplicial(Vertex v) const {
  const auto& nv = adjacency_.at(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      if (!adjacent(nv[i], nv[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> sizes) : parts_(std::move(sizes)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (int s : parts_) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

namespace {

int parse_positive(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
    throw std::invalid_argument("bad partition token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Partition Partition::parse(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<int> sizes;
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    if (caret == std::string::npos) {
      sizes.push_back(parse_positive(token));
      continue;
    }
    const int size = parse_positive(std::string_view(token).substr(0, caret));
    const int times = parse_positive(std::string_view(token).substr(caret + 1));
    if (times > 1'000'000) throw std::invalid_argument("partition multiplicity too large");
    sizes.insert(sizes.end(), static_cast<std::size_t>(times), size);
  }
  return Partition(std::move(sizes));
}

int Partition::vertex_count() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::part_of_vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vertex_count()));
  for (int p = 0; p < part_count(); ++p) out.insert(out.end(), parts_[p], p);
  return out;
}

std::vector<Vertex> Partition::block_starts() const {
  std::vector<Vertex> out(parts_.size());
  Vertex start = 0;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    out[p] = start;
    start += parts_[p];
  }
  return out;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int s : parts_) {
    if (!out.empty() && out.back().first == s) {
      ++out.back().second;
    } else {
      out.emplace_back(s, 1);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  auto mult = multiplicities();
  std::reverse(mult.begin(), mult.end());
  std::string out = "<";
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(mult[i].first);
    if (mult[i].second > 1) out += '^' + std::to_string(mult[i].second);
  }
  return out + '>';
}

// ---------------------------------------------------------------------------

Graph build_complete_multipartite(const Partition& partition) {
  Graph g(partition.vertex_count());
  const auto part = partition.part_of_vertices();
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part[u] != part[v]) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

namespace {

// Walks the shortest-path DAG from u towards v. Every step must decrease the
// distance to v by one, so neighbors are visited in increasing index order and
// the output comes out lexicographically sorted.
void extend_geodesics(const Graph& g, const std::vector<Distance>& to_target, Vertex target,
                      std::vector<Vertex>& prefix, std::vector<Geodesic>& out, std::size_t cap) {
  const Vertex tail = prefix.back();
  if (tail == target) {
    if (out.size() == cap) {
      throw GeodesicCapExceeded("more than " + std::to_string(cap) + " geodesics between " +
                                std::to_string(prefix.front()) + " and " + std::to_string(target));
    }
    out.push_back(Geodesic{prefix});
    return;
  }
  for (Vertex w : g.neighbors(tail)) {
    if (to_target[w] + 1 == to_target[tail]) {
      prefix.push_back(w);
      extend_geodesics(g, to_target, target, prefix, out, cap);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Geodesic> enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t cap) {
  const auto to_target = bfs_distances(g, v);
  if (to_target.at(u) == kUnreachable) {
    throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " are in different components");
  }
  std::vector<Geodesic> out;
  std::vector<Vertex> prefix{u};
  extend_geodesics(g, to_target, v, prefix, out, cap);
  return out;
}

Geodesic first_geodesic(const Graph& g, Vertex u, Vertex v) {
  const auto to_target = bfs_distances(g, v);
  if (to_target.at(u) == kUnreachable) {
    throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " are in different components");
  }
  Geodesic path{{u}};
  while (path.back() != v) {
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (to_target[w] + 1 == to_target[tail]) {
        path.vertices.push_back(w);
        break;
      }
    }
  }
  return path;
}

std::uint64_t count_geodesics(const Graph& g, Vertex u, Vertex v, std::uint64_t limit) {
  const auto from_u = bfs_distances(g, u);
  if (from_u.at(v) == kUnreachable) return 0;
  // Path counts by BFS layer, saturating.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return from_u[a] < from_u[b]; });
  ways[u] = 1;
  for (Vertex x : order) {
    if (from_u[x] == kUnreachable || x == u) continue;
    std::uint64_t total = 0;
    for (Vertex w : g.neighbors(x)) {
      if (from_u[w] + 1 == from_u[x]) total = std::min(total + ways[w], limit + 1);
    }
    ways[x] = total;
  }
  return ways[v];
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

// ---------------------------------------------------------------------------

bool is_geodesic(const Graph& g, const DistanceMatrix& dist, const Geodesic& path) {
  const auto& vs = path.vertices;
  if (vs.empty()) return false;
  const int n = g.vertex_count();
  for (Vertex v : vs) {
    if (v < 0 || v >= n) return false;
  }
  const Distance d = dist[vs.front()][vs.back()];
  if (d == kUnreachable || static_cast<std::size_t>(d) + 1 != vs.size()) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  // A walk of length dist(u,v) cannot revisit a vertex, so distinctness follows.
  return true;
}

std::string CertificateCheck::describe() const {
  auto pair_text = [&] {
    return pair ? " {" + std::to_string(pair->first) + "," + std::to_string(pair->second) + "}"
                : std::string();
  };
  switch (issue) {
    case CertificateIssue::none: return "valid";
    case CertificateIssue::vertex_out_of_range: return "vertex out of range";
    case CertificateIssue::duplicate_set_vertex: return "duplicate vertex in set";
    case CertificateIssue::unexpected_pair: return "path for a pair not in the set" + pair_text();
    case CertificateIssue::missing_pair: return "no path chosen for pair" + pair_text();
    case CertificateIssue::not_a_geodesic: return "chosen path is not a geodesic" + pair_text();
    case CertificateIssue::uncovered_vertices: {
      std::string out = "uncovered vertices:";
      for (Vertex v : uncovered) out += ' ' + std::to_string(v);
      return out;
    }
  }
  return "unknown";
}

CertificateCheck verify_certificate(const Graph& g, const Certificate& c) {
  CertificateCheck result;
  const int n = g.vertex_count();
  std::set<Vertex> members;
  for (Vertex v : c.set) {
    if (v < 0 || v >= n) {
      result.issue = CertificateIssue::vertex_out_of_range;
      return result;
    }
    if (!members.insert(v).second) {
      result.issue = CertificateIssue::duplicate_set_vertex;
      return result;
    }
  }
  const auto dist = all_pairs_distances(g);
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (Vertex v : members) covered[v] = true;

  for (const auto& [key, path] : c.chosen) {
    if (!members.contains(key.first) || !members.contains(key.second) || key.first >= key.second) {
      result.issue = CertificateIssue::unexpected_pair;
      result.pair = key;
      return result;
    }
    if (make_pair_key(path.vertices.empty() ? -1 : path.front(),
                      path.vertices.empty() ? -1 : path.back()) != key ||
        !is_geodesic(g, dist, path)) {
      result.issue = CertificateIssue::not_a_geodesic;
      result.pair = key;
      return result;
    }
    for (Vertex v : path.vertices) covered[v] = true;
  }
  for (auto a = members.begin(); a != members.end(); ++a) {
    for (auto b = std::next(a); b != members.end(); ++b) {
      if (dist[*a][*b] != kUnreachable && !c.chosen.contains({*a, *b})) {
        result.issue = CertificateIssue::missing_pair;
        result.pair = VertexPair{*a, *b};
        return result;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) result.uncovered.push_back(v);
  }
  if (!result.uncovered.empty()) result.issue = CertificateIssue::uncovered_vertices;
  return result;
}

}  // namespace sgkit
