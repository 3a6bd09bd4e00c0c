#include <doctest.h>

#include <random>

#include "sgkit/graph.hpp"
#include "sgkit/graph_io.hpp"
#include "support.hpp"

using namespace sgkit;
using sgkit::testing::make_graph;

TEST_SUITE("graph") {
  TEST_CASE("add_edge validates and deduplicates") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(1, 2));
  }

  TEST_CASE("partition parsing and canonical order") {
    CHECK(Partition::parse("3 1 2").parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition::parse("1^2,3^4") == Partition({3, 3, 3, 3, 1, 1}));
    CHECK(Partition::parse("2,2,2").to_string() == "<2^3>");
    CHECK(Partition({1, 3, 2}).to_string() == "<1,2,3>");
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0 3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2^x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
    const Partition p({2, 3, 1});
    CHECK(p.vertex_count() == 6);
    CHECK(p.part_of_vertices() == std::vector<int>{0, 0, 0, 1, 1, 2});
    CHECK(p.block_starts() == std::vector<Vertex>{0, 3, 5});
  }

  TEST_CASE("complete multipartite construction") {
    const Graph k2 = build_complete_multipartite(Partition({1, 1}));
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph c4 = build_complete_multipartite(Partition({2, 2}));
    CHECK(c4.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.neighbors(v).size() == 2);

    const Graph empty = build_complete_multipartite(Partition({3}));
    CHECK(empty.vertex_count() == 3);
    CHECK(empty.edge_count() == 0);
  }

  TEST_CASE("edge count is the sum of products of part sizes") {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& parts : sgkit::testing::integer_partitions(n)) {
        std::size_t expected = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          for (std::size_t j = i + 1; j < parts.size(); ++j) expected += parts[i] * parts[j];
        }
        CHECK(build_complete_multipartite(Partition(parts)).edge_count() == expected);
      }
    }
  }

  TEST_CASE("distances") {
    const auto c4 = all_pairs_distances(build_complete_multipartite(Partition({2, 2})));
    CHECK(c4[0][1] == 2);
    CHECK(c4[0][2] == 1);
    const auto k2 = all_pairs_distances(make_graph(2, {{0, 1}}));
    CHECK(k2[0][1] == 1);
    const auto empty = all_pairs_distances(build_complete_multipartite(Partition({3})));
    CHECK(empty[0][1] == kUnreachable);
    CHECK(empty[2][2] == 0);
  }

  TEST_CASE("geodesic enumeration") {
    const Graph c4 = build_complete_multipartite(Partition({2, 2}));
    const auto same_part = enumerate_geodesics(c4, 0, 1, 10);
    REQUIRE(same_part.size() == 2);
    CHECK(same_part[0].vertices == std::vector<Vertex>{0, 2, 1});
    CHECK(same_part[1].vertices == std::vector<Vertex>{0, 3, 1});

    CHECK(enumerate_geodesics(make_graph(2, {{0, 1}}), 0, 1, 10).size() == 1);
    const Graph k3 = build_complete_multipartite(Partition({1, 1, 1}));
    CHECK(enumerate_geodesics(k3, 0, 2, 10).size() == 1);

    CHECK_THROWS_AS(enumerate_geodesics(c4, 0, 1, 1), GeodesicCapExceeded);
    CHECK_THROWS_AS(enumerate_geodesics(build_complete_multipartite(Partition({3})), 0, 1, 10),
                    std::invalid_argument);
    CHECK(count_geodesics(build_complete_multipartite(Partition({2, 5})), 5, 6, 100) == 5);
    CHECK(count_geodesics(build_complete_multipartite(Partition({2, 5})), 5, 6, 3) == 4);
    CHECK(first_geodesic(c4, 1, 0).vertices == std::vector<Vertex>{1, 2, 0});
  }

  TEST_CASE("every enumerated geodesic has the BFS length") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 9;
      Graph g(n);
      std::bernoulli_distribution coin(0.35);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng)) g.add_edge(u, v);
        }
      }
      const auto dist = all_pairs_distances(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (dist[u][v] == kUnreachable) continue;
          const auto paths = enumerate_geodesics(g, u, v, 1 << 20);
          CHECK(paths.size() == count_geodesics(g, u, v, 1 << 20));
          for (const auto& p : paths) {
            CHECK(static_cast<int>(p.vertices.size()) - 1 == dist[u][v]);
            CHECK(is_geodesic(g, dist, p));
          }
          CHECK(std::is_sorted(paths.begin(), paths.end()));
          if (u != v) CHECK(first_geodesic(g, u, v) == paths.front());
        }
      }
    }
  }

  TEST_CASE("connected components") {
    const auto comp = connected_components(make_graph(5, {{0, 1}, {3, 4}}));
    CHECK(comp[0] == comp[1]);
    CHECK(comp[3] == comp[4]);
    CHECK(comp[0] != comp[2]);
    CHECK(comp[2] != comp[3]);
  }

  TEST_CASE("certificate verification") {
    const Graph c4 = build_complete_multipartite(Partition({2, 2}));
    Certificate good{{0, 1}, {{{0, 1}, Geodesic{{0, 2, 1}}}}};
    // One pair covers only one of the two opposite vertices.
    auto check = verify_certificate(c4, good);
    CHECK(check.issue == CertificateIssue::uncovered_vertices);
    CHECK(check.uncovered == std::vector<Vertex>{3});

    Certificate three{{0, 1, 2},
                      {{{0, 1}, Geodesic{{0, 3, 1}}}, {{0, 2}, Geodesic{{0, 2}}}, {{1, 2}, Geodesic{{1, 2}}}}};
    CHECK(verify_certificate(c4, three).valid());

    Certificate single{{0}, {}};
    CHECK(verify_certificate(Graph(1), single).valid());

    Certificate wrong_path = three;
    wrong_path.chosen[{0, 1}] = Geodesic{{0, 2, 3, 1}};
    CHECK(verify_certificate(c4, wrong_path).issue == CertificateIssue::not_a_geodesic);

    Certificate missing = three;
    missing.chosen.erase({1, 2});
    check = verify_certificate(c4, missing);
    CHECK(check.issue == CertificateIssue::missing_pair);
    REQUIRE(check.pair);
    CHECK(*check.pair == VertexPair{1, 2});

    Certificate extra = three;
    extra.chosen[{0, 3}] = Geodesic{{0, 3}};
    CHECK(verify_certificate(c4, extra).issue == CertificateIssue::unexpected_pair);

    Certificate out_of_range{{0, 9}, {}};
    CHECK(verify_certificate(c4, out_of_range).issue == CertificateIssue::vertex_out_of_range);

    Certificate dup{{0, 0}, {}};
    CHECK(verify_certificate(c4, dup).issue == CertificateIssue::duplicate_set_vertex);
    CHECK_FALSE(verify_certificate(c4, dup).describe().empty());
  }

  TEST_CASE("disconnected graphs: pairs across components carry no path") {
    const Graph g = make_graph(3, {{0, 1}});
    Certificate c{{0, 1, 2}, {{{0, 1}, Geodesic{{0, 1}}}}};
    CHECK(verify_certificate(g, c).valid());
    c.chosen[{0, 2}] = Geodesic{{0, 2}};
    CHECK_FALSE(verify_certificate(g, c).valid());
  }
}

TEST_SUITE("graph_io") {
  TEST_CASE("parse a small graph") {
    const auto parsed = parse_graph("p edge 2 1\ne 1 2\n");
    CHECK(parsed.graph == make_graph(2, {{0, 1}}));
    CHECK(parsed.warnings.empty());
  }

  TEST_CASE("comments, whitespace and CRLF") {
    const auto parsed = parse_graph("# hello\r\n\r\np  edge 3 2\r\n# mid\r\ne 1 2\r\n e  2 3 \r\n");
    CHECK(parsed.graph.edge_count() == 2);
    CHECK(parsed.comments == std::vector<std::string>{"hello", "mid"});
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph(""), GraphParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nx 1 2\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 two\n"), GraphParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\np edge 2 1\ne 1 2\n"), GraphParseError);
    try {
      parse_graph("p edge 2 1\ne 1 1\n");
    } catch (const GraphParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), GraphParseError);
  }

  TEST_CASE("duplicate edges warn and are dropped") {
    const auto parsed = parse_graph("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
    CHECK(parsed.graph.edge_count() == 2);
    CHECK(parsed.warnings.size() == 1);
  }

  TEST_CASE("serialize is canonical and round-trips") {
    const std::string messy = "# c\np edge 4 4\ne 4 3\ne 2 1\ne 3 1\ne 1 2\n";
    const auto parsed = parse_graph(messy);
    const std::string canon = serialize_graph(parsed.graph, parsed.comments);
    CHECK(canon == "# c\np edge 4 3\ne 1 2\ne 1 3\ne 3 4\n");
    const auto again = parse_graph(canon);
    CHECK(again.graph == parsed.graph);
    CHECK(serialize_graph(again.graph, again.comments) == canon);
  }
}
