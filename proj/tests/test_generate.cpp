#include <doctest.h>

#include <set>

#include "indgap/generate.hpp"
#include "indgap/graph_io.hpp"
#include "indgap/hereditary.hpp"

using namespace indgap;

TEST_CASE("generation reproduces the graph census") {
  auto counts = count_graphs(7);
  CHECK(counts == std::vector<long long>{0, 1, 2, 4, 11, 34, 156, 1044});
}

TEST_CASE("connected counts match the census") {
  std::vector<long long> connected(8, 0);
  for (const Graph& g : generate_graphs(7)) {
    if (g.is_connected()) ++connected[g.order()];
  }
  CHECK(connected == std::vector<long long>{0, 1, 1, 2, 6, 21, 112, 853});
}

TEST_CASE("filtered generation equals post-filtering") {
  auto tf = [](const Graph& g) { return g.is_triangle_free(); };
  std::set<std::string> filtered;
  for (const Graph& g : generate_graphs(6, tf)) filtered.insert(to_graph6(g));
  std::set<std::string> post;
  for (const Graph& g : generate_graphs(6)) {
    if (tf(g)) post.insert(to_graph6(g));
  }
  CHECK(filtered == post);

  auto cf = [](const Graph& g) { return !find_induced_claw(g); };
  std::set<std::string> filtered_cf;
  for (const Graph& g : generate_graphs(6, cf)) filtered_cf.insert(to_graph6(g));
  std::set<std::string> post_cf;
  for (const Graph& g : generate_graphs(6)) {
    if (cf(g)) post_cf.insert(to_graph6(g));
  }
  CHECK(filtered_cf == post_cf);
}

TEST_CASE("output is canonically labeled and ordered") {
  std::string prev;
  int prev_n = 0;
  for (const Graph& g : generate_graphs(5)) {
    std::string s = to_graph6(g);
    CHECK(canonical_form(g).graph6 == s);
    if (g.order() == prev_n) CHECK(prev < s);
    prev = s;
    prev_n = g.order();
  }
}

TEST_CASE("serial and parallel generation agree") {
  auto serial = generate_graphs(6, {}, Exec::serial);
  auto parallel = generate_graphs(6, {}, Exec::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("generation guards its budget") {
  CHECK_THROWS_AS(generate_graphs(0), DomainError);
  CHECK_THROWS_AS(generate_graphs(13), CapacityError);
}
