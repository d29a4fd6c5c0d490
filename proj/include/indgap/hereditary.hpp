#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indgap/exec.hpp"
#include "indgap/graph.hpp"

namespace indgap {

/// Isomorphism-invariant label: equal strings iff isomorphic graphs.
struct CanonicalForm {
  std::string graph6;
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical graph6 string via iterated degree refinement with backtracking
/// over the remaining cell choices.
CanonicalForm canonical_form(const Graph& g);

/// Relabels g into its canonical vertex order.
Graph canonical_copy(const Graph& g);

/// Some vertex set of g inducing a copy of h, or nullopt when g is h-free.
/// Backtracking search with degree pruning; requires h.order() >= 1.
std::optional<VertexSet> contains_induced(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Linear neighborhood scan for an independent triple: returns {center plus
/// triple} of some induced claw, or nullopt.
std::optional<VertexSet> find_induced_claw(const Graph& g);

std::optional<VertexSet> find_induced_2p3(const Graph& g);

/// Characterization of hereditary independence gap at most one: the graph is
/// claw-free and 2P3-free.
bool has_hereditary_gap_at_most_1(const Graph& g);

/// Minimal graphs of independence gap at least k+1 (in the induced-subgraph
/// order) with at most max_n vertices, as sorted canonical graph6 strings.
struct ForbiddenCatalog {
  int k = 0;
  int max_n = 0;
  bool complete_flag = false;
  long long derived_bound = 0;
  std::vector<std::string> members;

  bool contains(const std::string& canon) const;

  /// Catalogs proved complete in closed form: k=0 -> {P3},
  /// k=1 -> {claw, 2P3}.
  static ForbiddenCatalog known(int k);
};

/// Vertex count that provably covers every minimal forbidden graph for
/// hereditary gap k: bipartite members beyond the star and the path family
/// have at most k components, maximum degree k+1, and per-component diameter
/// 4k+1, so a Moore-type bound applies. Saturates at a large sentinel.
long long forbidden_catalog_vertex_bound(int k);

/// Exhaustive isomorph-free mining up to max_n vertices (budget-capped).
ForbiddenCatalog mine_forbidden_catalog(int k, int max_n, int generation_cap = 9,
                                        Exec exec = Exec::parallel);

struct RecognitionResult {
  bool verdict = false;
  bool provisional = false;                   // true when the catalog may be incomplete
  std::optional<std::string> witness_member;  // forbidden graph found in g
  std::optional<VertexSet> witness_vertices;
};

/// g has hereditary independence gap at most catalog.k iff it avoids every
/// member. A negative verdict is always sound; a positive one is provisional
/// unless the catalog is complete.
RecognitionResult recognize_hereditary_gap_at_most(const Graph& g, const ForbiddenCatalog& catalog);

/// Pluggable sub-solvers for the independent domination pipeline; exact
/// oracles by default, swappable for polynomial claw-free algorithms.
struct IndependentDominationSolvers {
  std::function<int(const Graph&)> alpha;
  std::function<bool(const Graph&)> well_covered;
};

/// i(G) for {claw, 2P3}-free graphs: alpha(G) when well-covered, else
/// alpha(G) - 1. Throws DomainError naming an induced claw or 2P3 when the
/// precondition fails.
int independent_domination_claw_2p3_free(const Graph& g, const IndependentDominationSolvers& solvers = {});

/// Catalog files: sorted graph6 lines plus a "<path>.json" sidecar holding
/// {k, max_n, complete_flag, derived_bound}.
void save_catalog(const ForbiddenCatalog& catalog, const std::string& path);
ForbiddenCatalog load_catalog(const std::string& path);

}  // namespace indgap
