#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "indgap/graph.hpp"

using namespace indgap;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("named families have the documented labelings") {
  Graph p3 = build_named({GraphFamily::Path, {3}});
  CHECK(p3.order() == 3);
  CHECK(p3.adjacent(0, 1));
  CHECK(p3.adjacent(1, 2));
  CHECK_FALSE(p3.adjacent(0, 2));

  Graph claw = build_named({GraphFamily::Star, {3}});
  CHECK(claw.order() == 4);
  CHECK(claw.degree(0) == 3);
  for (int leaf = 1; leaf <= 3; ++leaf) CHECK(claw.degree(leaf) == 1);
  CHECK(claw == claw_graph());

  Graph two_p3 = build_named({GraphFamily::CopiesOfP3, {2}});
  CHECK(two_p3.order() == 6);
  CHECK(two_p3.edge_count() == 4);
  CHECK(two_p3.adjacent(0, 1));
  CHECK(two_p3.adjacent(1, 2));
  CHECK(two_p3.adjacent(3, 4));
  CHECK(two_p3.adjacent(4, 5));
  CHECK_FALSE(two_p3.adjacent(2, 3));

  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
  CHECK(empty_graph(4).edge_count() == 0);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(build_named({GraphFamily::Cycle, {2}}), DomainError);
  CHECK_THROWS_AS(build_named({GraphFamily::Path, {-1}}), DomainError);
  CHECK_THROWS_AS(build_named({GraphFamily::Path, {1, 2}}), DomainError);
  CHECK_THROWS_AS(build_named({GraphFamily::CompleteBipartite, {3}}), DomainError);
  CHECK_THROWS_AS(build_named({GraphFamily::Claw, {1}}), DomainError);
}

TEST_CASE("construction rejects broken adjacency") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  std::vector<VertexSet> rows(2, VertexSet(2));
  rows[0].set(1);  // missing the mirrored bit
  CHECK_THROWS_AS(Graph::from_adjacency(rows), DomainError);
}

TEST_CASE("every constructed graph is symmetric and irreflexive") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 9);
    for (int v = 0; v < g.order(); ++v) {
      CHECK_FALSE(g.adjacent(v, v));
      g.neighbors(v).for_each([&](int u) { CHECK(g.adjacent(u, v)); });
    }
  }
}

TEST_CASE("induced subgraph relabels ascending and keeps maps") {
  auto sub = induced_subgraph(path_graph(4), VertexSet::of(4, {0, 1, 2}));
  CHECK(sub.graph == path_graph(3));
  CHECK(sub.to_original == std::vector<int>{0, 1, 2});

  auto leaves = induced_subgraph(claw_graph(), VertexSet::of(4, {1, 2, 3}));
  CHECK(leaves.graph == empty_graph(3));
  CHECK(leaves.from_original == std::vector<int>{-1, 0, 1, 2});

  Graph g = cycle_graph(6);
  auto whole = induced_subgraph(g, g.vertices());
  CHECK(whole.graph == g);

  CHECK_THROWS_AS(induced_subgraph(g, VertexSet(5)), DomainError);
}

TEST_CASE("induced subgraph composes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 8);
    VertexSet a(8);
    for (int v = 0; v < 8; ++v) {
      if (rng() % 2) a.set(v);
    }
    auto first = induced_subgraph(g, a);
    VertexSet b(first.graph.order());
    VertexSet b_in_g(8);
    for (int v = 0; v < first.graph.order(); ++v) {
      if (rng() % 2) {
        b.set(v);
        b_in_g.set(first.to_original[v]);
      }
    }
    CHECK(induced_subgraph(first.graph, b).graph == induced_subgraph(g, b_in_g).graph);
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  CHECK(brute::isomorphic(complement(path_graph(4)), path_graph(4)));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 7);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("disjoint union") {
  CHECK(disjoint_union(path_graph(3), path_graph(3)) == copies_of_p3(2));
  Graph g = cycle_graph(4);
  CHECK(disjoint_union(g, empty_graph(0)) == g);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    Graph a = random_graph(rng, 2 + trial % 4), b = random_graph(rng, 2 + (trial + 1) % 4);
    CHECK(brute::alpha(disjoint_union(a, b)) == brute::alpha(a) + brute::alpha(b));
  }
}

TEST_CASE("adding a universal vertex") {
  CHECK(brute::isomorphic(add_universal_vertex(empty_graph(4)), star_graph(4)));
  CHECK(add_universal_vertex(complete_graph(4)) == complete_graph(5));
  CHECK(brute::isomorphic(add_universal_vertex(empty_graph(3)), claw_graph()));
}

TEST_CASE("structure predicates") {
  CHECK(path_graph(6).is_connected());
  CHECK_FALSE(copies_of_p3(2).is_connected());
  CHECK(empty_graph(0).is_connected());
  CHECK(cycle_graph(6).is_bipartite());
  CHECK_FALSE(cycle_graph(5).is_bipartite());
  CHECK(cycle_graph(5).is_triangle_free());
  CHECK_FALSE(complete_graph(3).is_triangle_free());
  CHECK(star_graph(5).is_triangle_free());
}

TEST_CASE("mask extraction is capped at 64") {
  CHECK(path_graph(64).adjacency_masks().size() == 64);
  CHECK_THROWS_AS(path_graph(65).adjacency_masks(), CapacityError);
}
