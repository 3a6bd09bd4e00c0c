#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgkit {

using Vertex = int;

// Hop distance; kUnreachable marks pairs in different components.
using Distance = int;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Raised when an exact computation would need more work than its limits allow.
/// Callers must treat it as "unknown", never as a negative answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeodesicCapExceeded : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// Undirected simple graph on vertices 0..n-1, stored as sorted adjacency lists.
class Graph {
 public:
  explicit Graph(int vertex_count);

  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Returns false (and changes nothing) if the edge is already present.
  bool add_edge(Vertex u, Vertex v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // A vertex is simplicial when its neighborhood induces a clique.
  bool is_simplicial(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Part sizes of a complete multipartite graph, kept sorted nonincreasing.
class Partition {
 public:
  // Sorts the sizes. Throws std::invalid_argument on an empty list or a zero size.
  explicit Partition(std::vector<int> sizes);

  // Accepts "3 3 2", "3,3,2" and the multiset form "1^2,3^4".
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int vertex_count() const;
  int largest() const { return parts_.front(); }

  // Part index of every vertex in the canonical block layout.
  std::vector<int> part_of_vertices() const;
  // First vertex index of each part in the canonical block layout.
  std::vector<Vertex> block_starts() const;

  // Distinct sizes with multiplicities, largest size first.
  std::vector<std::pair<int, int>> multiplicities() const;

  // "<1^2,3>" style, sizes ascending.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct Geodesic {
  std::vector<Vertex> vertices;  // from one endpoint to the other

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Geodesic&, const Geodesic&) = default;
  friend auto operator<=>(const Geodesic&, const Geodesic&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;  // always first < second

inline VertexPair make_pair_key(Vertex a, Vertex b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

/// A vertex set together with one fixed geodesic per unordered pair of it.
struct Certificate {
  std::vector<Vertex> set;                 // sorted, no duplicates
  std::map<VertexPair, Geodesic> chosen;   // keyed by (min, max)

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

using DistanceMatrix = std::vector<std::vector<Distance>>;

/// Vertices are laid out part by part in the canonical (nonincreasing) order.
Graph build_complete_multipartite(const Partition& partition);

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// All u-v geodesics in lexicographic order of their vertex sequence.
/// Throws GeodesicCapExceeded when there are more than `cap`, and
/// std::invalid_argument when u and v are in different components.
std::vector<Geodesic> enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t cap);

/// The lexicographically first u-v geodesic; throws std::invalid_argument if disconnected.
Geodesic first_geodesic(const Graph& g, Vertex u, Vertex v);

/// Number of u-v geodesics, saturating at `limit + 1`.
std::uint64_t count_geodesics(const Graph& g, Vertex u, Vertex v, std::uint64_t limit);

std::vector<int> connected_components(const Graph& g);  // component id per vertex

enum class CertificateIssue {
  none,
  vertex_out_of_range,
  duplicate_set_vertex,
  unexpected_pair,    // a chosen path whose endpoints are not a pair of S
  missing_pair,       // a connected pair of S without a chosen path
  not_a_geodesic,
  uncovered_vertices,
};

struct CertificateCheck {
  CertificateIssue issue = CertificateIssue::none;
  std::optional<VertexPair> pair;     // offending pair, when relevant
  std::vector<Vertex> uncovered;      // filled for uncovered_vertices

  bool valid() const { return issue == CertificateIssue::none; }
  std::string describe() const;
};

/// Checks that every chosen path is a geodesic between its pair, that exactly the
/// connected pairs of S carry a path, and that S together with all paths covers V.
CertificateCheck verify_certificate(const Graph& g, const Certificate& c);

bool is_geodesic(const Graph& g, const DistanceMatrix& dist, const Geodesic& path);

}  // namespace sgkit
