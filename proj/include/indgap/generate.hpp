#pragma once

#include <functional>
#include <vector>

#include "indgap/graph.hpp"
#include "indgap/hereditary.hpp"

namespace indgap {

/// Isomorph-free exhaustive generation of all graphs with 1..max_n vertices:
/// each canonical n-vertex graph is extended by one new vertex with every
/// possible neighborhood, and duplicates are rejected by canonical form.
///
/// `keep` must be a hereditary (induced-subgraph-closed) predicate; it
/// prunes whole extension subtrees, which is what makes filtered generation
/// exhaustive for the filtered class. Graphs are returned canonically
/// labeled, ordered by (order, canonical string).
std::vector<Graph> generate_graphs(int max_n, const std::function<bool(const Graph&)>& keep = {},
                                   Exec exec = Exec::parallel);

/// Number of pairwise non-isomorphic graphs per order, same generation.
std::vector<long long> count_graphs(int max_n);

}  // namespace indgap
