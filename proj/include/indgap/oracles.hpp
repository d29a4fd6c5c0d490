#pragma once

#include <functional>
#include <vector>

#include "indgap/graph.hpp"

namespace indgap {

/// Hereditary-gap computations enumerate all 2^n induced subgraphs; this is
/// the default order ceiling.
inline constexpr int kDefaultHereditaryCap = 16;

/// Exact invariants of a graph, all computed by exhaustive search.
struct GapReport {
  int alpha = 0;          // independence number
  int idom = 0;           // independent domination number
  int gap = 0;            // alpha - idom
  int omega = 0;          // clique number
  int theta = 0;          // clique cover number
  bool semi_perfect = false;
  VertexSet max_witness;  // maximum maximal independent set (I1)
  VertexSet min_witness;  // minimum maximal independent set (I2)
};

/// Yields every maximal independent set exactly once in a deterministic
/// order; the callback returns false to stop early. Requires 1 <= n <= 64.
void for_each_maximal_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& emit);

std::vector<VertexSet> maximal_independent_sets(const Graph& g);

GapReport gap_report(const Graph& g);

int independence_number(const Graph& g);
int independent_domination_number(const Graph& g);

/// Naive full-enumeration mode kept for cross-checking the pruned search.
int independent_domination_number_reference(const Graph& g);

int clique_number(const Graph& g);

struct CliqueCover {
  int theta = 0;
  std::vector<VertexSet> cliques;
};

/// Minimum clique cover via exact coloring of the complement.
CliqueCover minimum_clique_cover(const Graph& g);

bool is_well_covered(const Graph& g);

/// Maximum of the independence gap over all nonempty induced subgraphs.
/// Requires 1 <= n <= cap.
int hereditary_independence_gap(const Graph& g, int cap = kDefaultHereditaryCap);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_maximal_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s, const VertexSet& targets);

/// True iff the clique c meets every maximal independent set. Throws
/// DomainError if c is empty or not a clique.
bool is_strong_clique(const Graph& g, const VertexSet& c);

/// Adds the lowest addable vertex until the set is maximal.
VertexSet extend_to_maximal_independent_set(const Graph& g, VertexSet s);

}  // namespace indgap
