#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpd/errors.hpp"
#include "fpd/graph.hpp"
#include "oracles.hpp"

using namespace fpd;

TEST_CASE("edge list parsing: smallest path") {
  Graph g = parse_edge_list("3 2\n0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list parsing: comments, blanks, duplicates") {
  Graph g = parse_edge_list(
      "# a header comment\n"
      "3 3   # counts\n"
      "\n"
      "0 1\n"
      "0 1  # duplicate is fine\n"
      "1 2\n");
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list parsing errors carry line numbers") {
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0"), ParseError);
  try {
    parse_edge_list("2 1\n0 0");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\nzero one"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 0\n0 1"), ParseError);
}

TEST_CASE("edge list round trip") {
  Graph g = parse_edge_list("7 7\n0 3\n0 4\n3 4\n1 3\n2 3\n4 5\n4 6");
  Graph h = parse_edge_list(to_edge_list(g));
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  for (int u = 0; u < 7; ++u) CHECK(h.neighbors(u) == g.neighbors(u));
}

TEST_CASE("graph6 decoding of known strings") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.has_edge(0, 1));

  Graph empty3 = parse_graph6("B?");
  CHECK(empty3.vertex_count() == 3);
  CHECK(empty3.edge_count() == 0);

  Graph k3 = parse_graph6("Bw");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);

  Graph with_header = parse_graph6(">>graph6<<A_");
  CHECK(with_header.edge_count() == 1);
}

TEST_CASE("graph6 encoding of known strings") {
  CHECK(encode_graph6(parse_graph6("A_")) == "A_");
  CHECK(encode_graph6(parse_graph6("B?")) == "B?");
  CHECK(encode_graph6(parse_graph6("Bw")) == "Bw");
}

TEST_CASE("graph6 decode errors") {
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);    // truncated bits
  CHECK_THROWS_AS(parse_graph6("A_ "), ParseError);  // invalid character
  CHECK_THROWS_AS(parse_graph6("A__"), ParseError);  // trailing content
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip against an independent encoder") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 62);
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < 0.4) g.add_edge(u, v);

    std::string encoded = encode_graph6(g);
    CHECK(encoded == fpd_test::reference_graph6_encode(g));
    Graph back = parse_graph6(encoded);
    CHECK(encode_graph6(back) == encoded);
    REQUIRE(back.vertex_count() == n);
    for (int u = 0; u < n; ++u) CHECK(back.neighbors(u) == g.neighbors(u));
  }
}

TEST_CASE("graph6 above 62 vertices") {
  Graph g(70);
  for (int i = 0; i + 1 < 70; ++i) g.add_edge(i, i + 1);
  Graph back = parse_graph6(encode_graph6(g));
  CHECK(back.vertex_count() == 70);
  CHECK(back.edge_count() == 69);
}

TEST_CASE("autodetection picks the right parser") {
  CHECK(parse_graph_auto("3 2\n0 1\n1 2").vertex_count() == 3);
  CHECK(parse_graph_auto("A_").vertex_count() == 2);
  CHECK(parse_graph_auto("# comment\nA_").vertex_count() == 2);
}

TEST_CASE("graph invariants") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // idempotent
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), ParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 9), ParameterError);
  // symmetry
  for (int u = 0; u < 4; ++u)
    for (int v : g.neighbors(u)) CHECK(g.has_edge(v, u));
}

TEST_CASE("connected components") {
  Graph p3 = parse_edge_list("3 2\n0 1\n1 2");
  auto comps = connected_components(p3);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == 3);

  Graph k2 = parse_edge_list("2 1\n0 1");
  Graph both = disjoint_union(p3, k2);
  comps = connected_components(both);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 2);
  CHECK_FALSE(is_connected(both));
  CHECK(is_connected(p3));
}

TEST_CASE("labels") {
  Graph g(2);
  CHECK_FALSE(g.has_labels());
  g.set_label(1, "b");
  CHECK(g.label(1) == "b");
  CHECK(g.label(0).empty());
}
