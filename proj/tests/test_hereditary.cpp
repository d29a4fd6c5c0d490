#include <doctest.h>

#include <cstdio>
#include <map>
#include <random>

#include "brute.hpp"
#include "indgap/generate.hpp"
#include "indgap/graph_io.hpp"
#include "indgap/hereditary.hpp"
#include "indgap/oracles.hpp"

using namespace indgap;

namespace {

Graph permuted(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  for (int v = 0; v < g.order(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.order(); ++v) {
    g.neighbors(v).for_each([&](int u) {
      if (u > v) edges.emplace_back(perm[v], perm[u]);
    });
  }
  return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("canonical form is relabeling-invariant") {
  std::mt19937 rng(61);
  for (const Graph& g : generate_graphs(7)) {
    CanonicalForm base = canonical_form(g);
    CHECK(base.graph6 == to_graph6(g));  // generator output is canonically labeled
    for (int trial = 0; trial < 3; ++trial) {
      CHECK(canonical_form(permuted(g, rng)) == base);
    }
  }
  CHECK(canonical_form(Graph(3, {{0, 1}, {1, 2}})) == canonical_form(Graph(3, {{1, 0}, {0, 2}})));
  CHECK(canonical_form(claw_graph()) != canonical_form(path_graph(4)));
}

TEST_CASE("canonical equality decides isomorphism, checked by permutation brute force") {
  // exhaustively over all pairs of graphs with equal order up to 6; the
  // expensive permutation scan runs only on pairs with equal degree sequences
  std::map<int, std::vector<Graph>> by_order;
  for (const Graph& g : generate_graphs(6)) by_order[g.order()].push_back(g);
  for (auto& [n, graphs] : by_order) {
    for (std::size_t a = 0; a < graphs.size(); ++a) {
      for (std::size_t b = a; b < graphs.size(); ++b) {
        bool same_canon = canonical_form(graphs[a]) == canonical_form(graphs[b]);
        if (brute::degree_sequence(graphs[a]) == brute::degree_sequence(graphs[b])) {
          CHECK(same_canon == brute::isomorphic(graphs[a], graphs[b]));
        } else {
          CHECK_FALSE(same_canon);
        }
      }
    }
  }
}

TEST_CASE("canonical copy is idempotent") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    Graph canon = canonical_copy(g);
    CHECK(to_graph6(canon) == canonical_form(g).graph6);
    CHECK(canonical_copy(canon) == canon);
    CHECK(brute::isomorphic(g, canon));
  }
}

TEST_CASE("large-order canonical path agrees with itself under relabeling") {
  std::mt19937 rng(71);
  Graph g(20, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {6, 7}, {0, 19}, {18, 19}, {10, 11}, {11, 12}, {9, 10}});
  CanonicalForm base = canonical_form(g);
  for (int trial = 0; trial < 5; ++trial) CHECK(canonical_form(permuted(g, rng)) == base);
}

TEST_CASE("induced subgraph containment") {
  auto hit = contains_induced(star_graph(4), claw_graph());
  REQUIRE(hit);
  CHECK(hit->test(0));  // the center must participate
  CHECK(hit->count() == 4);
  CHECK(brute::isomorphic(induced_subgraph(star_graph(4), *hit).graph, claw_graph()));

  auto two_p3 = contains_induced(path_graph(7), copies_of_p3(2));
  REQUIRE(two_p3);
  CHECK(*two_p3 == VertexSet::of(7, {0, 1, 2, 4, 5, 6}));

  CHECK_FALSE(contains_induced(complete_graph(3), path_graph(3)));
  CHECK_THROWS_AS(contains_induced(complete_graph(3), Graph()), DomainError);
}

TEST_CASE("containment search agrees with a brute subset scan") {
  std::vector<Graph> patterns = {path_graph(3), path_graph(4), claw_graph(), cycle_graph(4)};
  for (const Graph& g : generate_graphs(6)) {
    for (const Graph& h : patterns) {
      auto found = contains_induced(g, h);
      bool expected = false;
      if (h.order() <= g.order()) {
        for (unsigned mask = 0; mask < (1u << g.order()) && !expected; ++mask) {
          if (std::popcount(mask) != h.order()) continue;
          VertexSet s(g.order());
          for (int v = 0; v < g.order(); ++v) {
            if (mask >> v & 1) s.set(v);
          }
          if (brute::isomorphic(induced_subgraph(g, s).graph, h)) expected = true;
        }
      }
      CHECK(found.has_value() == expected);
      if (found) CHECK(brute::isomorphic(induced_subgraph(g, *found).graph, h));
    }
  }
}

TEST_CASE("specialized claw detection agrees with the generic search") {
  for (const Graph& g : generate_graphs(7)) {
    CHECK(find_induced_claw(g).has_value() == contains_induced(g, claw_graph()).has_value());
    if (auto claw = find_induced_claw(g)) {
      CHECK(brute::isomorphic(induced_subgraph(g, *claw).graph, claw_graph()));
    }
  }
}

TEST_CASE("hereditary gap at most one via forbidden subgraphs") {
  CHECK(has_hereditary_gap_at_most_1(cycle_graph(5)));
  CHECK_FALSE(has_hereditary_gap_at_most_1(claw_graph()));
  CHECK_FALSE(has_hereditary_gap_at_most_1(copies_of_p3(2)));
  CHECK_FALSE(has_hereditary_gap_at_most_1(path_graph(7)));
  for (const Graph& g : generate_graphs(6)) {
    if (g.order() == 0) continue;
    CHECK(has_hereditary_gap_at_most_1(g) == (hereditary_independence_gap(g) <= 1));
  }
}

TEST_CASE("derived completeness bounds") {
  CHECK(forbidden_catalog_vertex_bound(0) == 3);
  CHECK(forbidden_catalog_vertex_bound(1) == 11);
  CHECK(forbidden_catalog_vertex_bound(2) == 3068);
  CHECK_THROWS_AS(forbidden_catalog_vertex_bound(-1), DomainError);
}

TEST_CASE("known catalogs") {
  ForbiddenCatalog f0 = ForbiddenCatalog::known(0);
  CHECK(f0.members == std::vector<std::string>{canonical_form(path_graph(3)).graph6});
  CHECK(f0.complete_flag);

  ForbiddenCatalog f1 = ForbiddenCatalog::known(1);
  CHECK(f1.members.size() == 2);
  CHECK(f1.contains(canonical_form(claw_graph()).graph6));
  CHECK(f1.contains(canonical_form(copies_of_p3(2)).graph6));
  CHECK(f1.complete_flag);

  CHECK_THROWS_AS(ForbiddenCatalog::known(2), DomainError);
}

TEST_CASE("mining small catalogs") {
  ForbiddenCatalog m0 = mine_forbidden_catalog(0, 4);
  CHECK(m0.members == std::vector<std::string>{canonical_form(path_graph(3)).graph6});
  CHECK(m0.complete_flag);  // bound is 3

  ForbiddenCatalog m0_tiny = mine_forbidden_catalog(0, 2);
  CHECK(m0_tiny.members.empty());
  CHECK_FALSE(m0_tiny.complete_flag);

  ForbiddenCatalog m1 = mine_forbidden_catalog(1, 6);
  CHECK(m1.members.size() == 2);
  CHECK(m1.contains(canonical_form(claw_graph()).graph6));
  CHECK(m1.contains(canonical_form(copies_of_p3(2)).graph6));
  CHECK_FALSE(m1.complete_flag);  // bound 11 exceeds the searched range

  CHECK_THROWS_AS(mine_forbidden_catalog(1, 10), CapacityError);
  CHECK_THROWS_AS(mine_forbidden_catalog(-1, 5), DomainError);
}

TEST_CASE("mined members are pairwise incomparable and sized within the bounds") {
  for (int k = 0; k <= 2; ++k) {
    ForbiddenCatalog m = mine_forbidden_catalog(k, k == 2 ? 7 : 6);
    for (const auto& a : m.members) {
      Graph ga = parse_graph6(a);
      CHECK(ga.order() >= k + 3);
      CHECK(ga.order() <= m.derived_bound);
      for (const auto& b : m.members) {
        if (a == b) continue;
        CHECK_FALSE(contains_induced(parse_graph6(b), ga).has_value());
      }
    }
  }
}

TEST_CASE("a graph with a claw component fails k=1 recognition") {
  Graph g = disjoint_union(claw_graph(), path_graph(3));
  RecognitionResult res = recognize_hereditary_gap_at_most(g, ForbiddenCatalog::known(1));
  CHECK_FALSE(res.verdict);
  REQUIRE(res.witness_member);
  CHECK(*res.witness_member == canonical_form(claw_graph()).graph6);
  REQUIRE(res.witness_vertices);
  CHECK(brute::isomorphic(induced_subgraph(g, *res.witness_vertices).graph, claw_graph()));
}

TEST_CASE("catalog recognition matches the oracle for k in {0,1}") {
  ForbiddenCatalog catalogs[2] = {ForbiddenCatalog::known(0), ForbiddenCatalog::known(1)};
  for (const Graph& g : generate_graphs(6)) {
    if (g.order() == 0) continue;
    int hereditary = hereditary_independence_gap(g);
    for (int k = 0; k <= 1; ++k) {
      RecognitionResult res = recognize_hereditary_gap_at_most(g, catalogs[k]);
      CHECK(res.verdict == (hereditary <= k));
      CHECK_FALSE(res.provisional);
      if (!res.verdict) {
        REQUIRE(res.witness_member);
        REQUIRE(res.witness_vertices);
        CHECK(brute::isomorphic(induced_subgraph(g, *res.witness_vertices).graph, parse_graph6(*res.witness_member)));
      }
    }
  }
}

TEST_CASE("recognition against incomplete catalogs is labeled provisional") {
  ForbiddenCatalog m2 = mine_forbidden_catalog(2, 5);
  RecognitionResult res = recognize_hereditary_gap_at_most(path_graph(4), m2);
  CHECK(res.verdict);
  CHECK(res.provisional);
  RecognitionResult neg = recognize_hereditary_gap_at_most(star_graph(4), m2);
  CHECK_FALSE(neg.verdict);
  CHECK_FALSE(neg.provisional);  // a found member is conclusive
}

TEST_CASE("independent domination pipeline") {
  CHECK(independent_domination_claw_2p3_free(cycle_graph(5)) == 2);
  CHECK(independent_domination_claw_2p3_free(path_graph(3)) == 1);
  CHECK(independent_domination_claw_2p3_free(complete_bipartite_graph(1, 2)) == 1);

  CHECK_THROWS_WITH_AS(independent_domination_claw_2p3_free(claw_graph()),
                       doctest::Contains("claw"), DomainError);
  CHECK_THROWS_WITH_AS(independent_domination_claw_2p3_free(copies_of_p3(2)),
                       doctest::Contains("2P3"), DomainError);

  for (const Graph& g : generate_graphs(7, [](const Graph& h) {
         return !find_induced_claw(h) && !find_induced_2p3(h);
       })) {
    CHECK(independent_domination_claw_2p3_free(g) == independent_domination_number(g));
  }
}

TEST_CASE("pipeline accepts substitute sub-solvers") {
  IndependentDominationSolvers solvers;
  solvers.alpha = [](const Graph& g) { return brute::alpha(g); };
  solvers.well_covered = [](const Graph& g) { return brute::gap(g) == 0; };
  for (const Graph& g : generate_graphs(5, [](const Graph& h) {
         return !find_induced_claw(h) && !find_induced_2p3(h);
       })) {
    if (g.order() == 0) continue;
    CHECK(independent_domination_claw_2p3_free(g, solvers) == independent_domination_number(g));
  }
}

TEST_CASE("catalog persistence round trip") {
  std::string path = "mined_catalog_test.g6";
  ForbiddenCatalog m1 = mine_forbidden_catalog(1, 6);
  save_catalog(m1, path);
  ForbiddenCatalog loaded = load_catalog(path);
  CHECK(loaded.members == m1.members);
  CHECK(loaded.k == m1.k);
  CHECK(loaded.max_n == m1.max_n);
  CHECK(loaded.complete_flag == m1.complete_flag);
  CHECK(loaded.derived_bound == m1.derived_bound);
  std::remove(path.c_str());
  std::remove((path + ".json").c_str());
  CHECK_THROWS_AS(load_catalog("does_not_exist.g6"), Error);
}
