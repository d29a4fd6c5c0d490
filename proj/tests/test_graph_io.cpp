#include <doctest.h>

#include <random>
#include <sstream>

#include "brute.hpp"
#include "indgap/generate.hpp"
#include "indgap/graph_io.hpp"

using namespace indgap;

TEST_CASE("frozen graph6 values") {
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("B?") == empty_graph(3));
  CHECK(parse_graph6("?") == empty_graph(0));
  CHECK(parse_graph6("@") == empty_graph(1));
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("serializer matches an independent encoder") {
  for (const Graph& g : generate_graphs(6)) CHECK(to_graph6(g) == brute::graph6(g));
  std::mt19937 rng(23);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 9 + static_cast<int>(rng() % 20);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    CHECK(to_graph6(g) == brute::graph6(g));
  }
}

TEST_CASE("round trips") {
  // string identity on canonical encodings
  for (const Graph& g : generate_graphs(5)) {
    std::string s = to_graph6(g);
    CHECK(to_graph6(parse_graph6(s)) == s);
  }
  // labeled-graph identity
  std::mt19937 rng(29);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng() % 11);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("multi-byte size header") {
  Graph big(100, {{0, 99}, {1, 50}, {63, 64}});
  std::string s = to_graph6(big);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == big);

  Graph exact63 = empty_graph(63);
  CHECK(parse_graph6(to_graph6(exact63)) == exact63);
  Graph last62 = empty_graph(62);
  CHECK(to_graph6(last62)[0] != '~');
}

TEST_CASE("graph6 size headers beyond the cap are refused") {
  // "~AXO" encodes n = 9808 in the 4-byte form
  CHECK_THROWS_AS(parse_graph6("~AXO"), CapacityError);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // truncated bit stream
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);   // trailing characters
  CHECK_THROWS_AS(parse_graph6("B\x1c"), ParseError); // out-of-range character
  CHECK_THROWS_AS(parse_graph6("AO"), ParseError);    // nonzero padding
  try {
    parse_graph6("Bww");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("edge list format") {
  CHECK(parse_edge_list("3\n0 1\n1 2") == path_graph(3));
  CHECK(parse_edge_list("2\n") == empty_graph(2));
  CHECK(parse_edge_list("3\n0 1\n0 1\n1 2") == path_graph(3));  // duplicates collapse
  CHECK(parse_edge_list(" 4 \n0 1\n\n2 3\n") == Graph(4, {{0, 1}, {2, 3}}));

  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\nx y"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2"), ParseError);
  try {
    parse_edge_list("3\n0 1\n1 1");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);  // 1-based line number
  }
}

TEST_CASE("edge list round trip") {
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}, {0, 4}});
  CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("stream readers") {
  std::istringstream g6("Bw\n\nB?\r\nCh\n");
  auto graphs = read_graphs(g6, GraphFormat::graph6);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == complete_graph(3));
  CHECK(graphs[1] == empty_graph(3));
  CHECK(graphs[2] == path_graph(4));

  std::istringstream el("3\n0 1\n1 2\n");
  auto single = read_graphs(el, GraphFormat::edgelist);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == path_graph(3));

  std::istringstream blank("\n  \n");
  CHECK(read_graphs(blank, GraphFormat::edgelist).empty());
}
