#include <doctest.h>

#include <random>

#include "sgkit/graph_io.hpp"
#include "sgkit/reduction.hpp"
#include "support.hpp"

using namespace sgkit;
using namespace sgkit::testing;

namespace {

std::vector<Vertex> first_minimum_dominating_set(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    if ((best.empty() || set.size() < best.size()) && is_dominating_set(g, set)) best = set;
  }
  return best;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("two-coloring") {
    const auto b = two_coloring(path_graph(4));
    CHECK(b.side == std::vector<int>{0, 1, 0, 1});
    CHECK_THROWS_AS(two_coloring(cycle_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(validate_bipartition(path_graph(3), Bipartition{{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_bipartition(path_graph(3), Bipartition{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_bipartition(path_graph(3), Bipartition{{0, 2, 0}}), std::invalid_argument);
  }

  TEST_CASE("construction on K_2") {
    const Graph k2 = path_graph(2);
    const auto inst = reduce(k2, two_coloring(k2), 1);
    CHECK(inst.target.vertex_count() == 6);
    CHECK(inst.target.edge_count() == 6);
    CHECK(inst.target_budget == 3);
    CHECK_THROWS_AS(reduce(k2, two_coloring(k2), -1), std::invalid_argument);
  }

  TEST_CASE("structure of the target graph") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = random_connected_bipartite(2 + trial % 6, rng);
      const auto inst = reduce(g, two_coloring(g), 1);
      const int n = g.vertex_count();
      CHECK(inst.target.vertex_count() == 2 * n + 2);
      CHECK(inst.target.edge_count() == g.edge_count() + 1 + 2 * static_cast<std::size_t>(n));
      validate_bipartition(inst.target, Bipartition{inst.target_sides()});
      for (Vertex v = 0; v < n; ++v) {
        CHECK(inst.target.is_simplicial(inst.pendant(v)));
        CHECK(inst.target.neighbors(inst.pendant(v)).size() == 1);
        CHECK(inst.roles[v].role == Role::original);
        CHECK(inst.roles[v].source == v);
        CHECK(inst.roles[inst.pendant(v)].source == v);
        for (Vertex w = 0; w < n; ++w) CHECK(inst.target.adjacent(v, w) == g.adjacent(v, w));
      }
      CHECK(inst.roles[inst.hub_x()].role == Role::hub_x);
      CHECK(inst.roles[inst.hub_y()].role == Role::hub_y);
      CHECK(inst.role_comments().size() == static_cast<std::size_t>(2 * n + 3));
    }
  }

  TEST_CASE("P_4: domination number 2 and a target budget of exactly 6") {
    const Graph p4 = path_graph(4);
    const auto inst = reduce(p4, two_coloring(p4), 2);
    CHECK(inst.target.vertex_count() == 10);
    CHECK(dominating_number_exact(p4) == 2);
    OracleLimits limits;
    limits.max_vertices = 10;
    const int sg = strong_geodetic_number_exact(inst.target, limits).value;
    CHECK(sg <= 6);
    CHECK_FALSE(sg <= 5);
    CHECK(verify_equivalence(p4, two_coloring(p4), 4).holds());
  }

  TEST_CASE("K_2 and the star K_{1,3}") {
    const Graph k2 = path_graph(2);
    const auto r = verify_equivalence(k2, two_coloring(k2), 2);
    CHECK(r.holds());
    CHECK(r.domination_number == 1);

    const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto s = verify_equivalence(star, two_coloring(star), 4);
    CHECK(s.domination_number == 1);
    CHECK(s.target_sg <= 1 + 4);
    CHECK(s.holds());
  }

  TEST_CASE("a single source vertex breaks the equivalence") {
    const auto r = verify_equivalence(Graph(1), Bipartition{{0}}, 1);
    CHECK(r.domination_number == 1);
    CHECK(r.target_sg == 3);
    CHECK_FALSE(r.holds());
  }

  TEST_CASE("forward certificates from every dominating set of small graphs") {
    for (int n = 2; n <= 5; ++n) {
      for (const Graph& g : connected_bipartite_graphs(n)) {
        const auto inst = reduce(g, two_coloring(g), 0);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
          std::vector<Vertex> d;
          for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1) d.push_back(v);
          }
          if (!is_dominating_set(g, d)) {
            CHECK_THROWS_AS(forward_certificate(inst, d), std::invalid_argument);
            continue;
          }
          const auto cert = forward_certificate(inst, d);
          CHECK(cert.set.size() == d.size() + static_cast<std::size_t>(n));
          const auto check = verify_certificate(inst.target, cert);
          CHECK_MESSAGE(check.valid(), check.describe());
        }
      }
    }
  }

  TEST_CASE("the dominator routes are the ones used") {
    const Graph p4 = path_graph(4);
    const auto inst = reduce(p4, two_coloring(p4), 2);
    const auto cert = forward_certificate(inst, {1, 2});
    // 1 is in Y, so it reaches the pendant of its neighbor 0 through hub_y.
    CHECK(cert.chosen.at(make_pair_key(1, inst.pendant(0))).vertices ==
          std::vector<Vertex>{1, 0, inst.hub_y(), inst.pendant(0)});
    CHECK(cert.chosen.at(make_pair_key(2, inst.pendant(2))).vertices ==
          std::vector<Vertex>{2, inst.hub_y(), inst.pendant(2)});
  }

  TEST_CASE("equivalence on every connected bipartite graph with at most 5 vertices") {
    int graphs = 0;
    for (int n = 2; n <= 5; ++n) {
      for (const Graph& g : connected_bipartite_graphs(n)) {
        const auto b = two_coloring(g);
        const auto r = verify_equivalence(g, b, n);
        CHECK(r.holds());
        CHECK(r.domination_number == static_cast<int>(first_minimum_dominating_set(g).size()));
        ++graphs;
      }
    }
    CHECK(graphs > 100);
  }

  TEST_CASE("reduced graph serializes with role comments") {
    const Graph p4 = path_graph(4);
    const auto inst = reduce(p4, two_coloring(p4), 2);
    const std::string text = serialize_graph(inst.target, inst.role_comments());
    const auto parsed = parse_graph(text);
    CHECK(parsed.graph == inst.target);
    CHECK(parsed.comments == inst.role_comments());
  }
}
