#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "indgap/graph.hpp"

namespace indgap {

enum class VertexRole { original, v_type, u_type, star_center, star_leaf, universal };

struct RoleEntry {
  VertexRole role = VertexRole::original;
  int row = 0;     // 1-based, v_type/u_type only
  int column = 0;  // 1-based, v_type/u_type only
};

enum class EdgeKind { column, row, diagonal, cross, g_edge, union_part, universal };

const char* to_string(VertexRole role);
const char* to_string(EdgeKind kind);

/// A constructed reduction instance: the gadget graph plus per-vertex role
/// annotations and per-edge kind labels.
struct GadgetArtifact {
  Graph graph;
  std::vector<RoleEntry> roles;
  std::vector<std::tuple<int, int, EdgeKind>> edge_kinds;  // u < v
  int source_n = 0;
  int k = 0;
  int star_leaves = -1;              // well-covered reduction only
  std::optional<VertexSet> witness;  // universal-vertex reduction: induced star on I + {v}
};

/// Disjoint union of g with the star K_{1,star_leaves}. With star_leaves =
/// k+1 (the default choice), g is well-covered iff the result has
/// independence gap at most k; with star_leaves = k that equivalence breaks
/// exactly when the gap of g is 1.
GadgetArtifact reduce_wellcovered_to_gap(const Graph& g, int k, int star_leaves);

/// The five-edge-kind construction: k copies of each source vertex arranged
/// in k columns, plus k(k-1) connector vertices u_{i,j} (i != j), with
/// column, row, diagonal, cross, and source edges. The result always has
/// independence gap at most one, and alpha reaches k iff the source has an
/// independent set of size k.
GadgetArtifact build_gap1_gadget(const Graph& g, int k);

/// Universal-vertex reduction: alpha(g) >= k iff the result has hereditary
/// independence gap at least k-1. Requires k >= 2.
GadgetArtifact reduce_is_to_hereditary_gap(const Graph& g, int k);

/// Caps for oracle-based gadget verification.
struct EnumerationBudget {
  int max_vertices = 30;
  long long max_sets = 2000;
};

struct GadgetClaimsReport {
  bool idom_is_k_minus_1 = false;
  bool gap_at_most_one = false;
  bool alpha_iff = false;        // alpha(source) >= k  <=>  alpha(gadget) >= k
  bool wellcovered_iff = false;  // alpha(source) >= k  <=>  gadget not well-covered
  int alpha_source = 0;
  int alpha_gadget = 0;
  int idom_gadget = 0;
  long long sets_enumerated = 0;

  bool all() const { return idom_is_k_minus_1 && gap_at_most_one && alpha_iff && wellcovered_iff; }
};

/// Exhaustively evaluates the four gadget claims; refuses instances whose
/// enumeration exceeds the budget.
GadgetClaimsReport verify_gadget_claims(const GadgetArtifact& artifact, const Graph& source, int k,
                                        const EnumerationBudget& budget = {});

}  // namespace indgap
