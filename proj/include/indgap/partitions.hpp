#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "indgap/exec.hpp"
#include "indgap/graph.hpp"

namespace indgap {

/// Ordered list of pairwise disjoint nonempty cliques covering the vertex
/// set of a graph of the stored order.
class CliquePartition {
public:
  CliquePartition(int graph_order, std::vector<VertexSet> cliques)
      : graph_order_(graph_order), cliques_(std::move(cliques)) {
    for (const auto& c : cliques_) {
      if (c.size() != graph_order_) throw DomainError("partition clique not bound to graph");
    }
  }

  int graph_order() const { return graph_order_; }
  int size() const { return static_cast<int>(cliques_.size()); }
  const std::vector<VertexSet>& cliques() const { return cliques_; }
  const VertexSet& clique(int j) const { return cliques_[j]; }

private:
  int graph_order_;
  std::vector<VertexSet> cliques_;
};

/// True iff every part is a nonempty clique, the parts are pairwise
/// disjoint, and their union is the whole vertex set.
bool validate_partition(const Graph& g, const CliquePartition& p);

/// Outcome of a tightness test. When the verdict is negative,
/// witness_cliques lists the indices of the avoided cliques and witness_set
/// is an independent set disjoint from their union that dominates it;
/// extending witness_set greedily to a maximal independent set keeps
/// avoiding all the witness cliques.
struct TightnessCertificate {
  bool verdict = false;
  std::vector<int> witness_cliques;
  VertexSet witness_set;
};

/// Reference tightness test by exhaustive enumeration: the partition is
/// k-tight iff every maximal independent set meets the union of every k
/// cliques. k-subsets are scanned in lexicographic order and the first
/// failing (subset, maximal independent set) pair is the canonical witness;
/// the parallel mode returns the same certificate.
TightnessCertificate is_k_tight(const Graph& g, const CliquePartition& p, int k, Exec exec = Exec::serial);

/// An alpha-clique partition (color classes of an optimal coloring of the
/// complement), or nullopt when the graph is not semi-perfect.
std::optional<CliquePartition> find_alpha_clique_partition(const Graph& g);

/// Independence gap of a semi-perfect graph computed as
/// (least k such that an alpha-clique partition is k-tight) - 1.
int gap_via_tightness(const Graph& g);

/// Bounded-witness certification that the gap is at most k for a
/// K_{clique_bound}-free graph equipped with an alpha-clique partition: the
/// partition fails (k+1)-tightness iff some independent set of size at most
/// (k+1)*(clique_bound-1) is disjoint from k+1 partition cliques whose union
/// it dominates. Independent sets are enumerated in increasing size, so the
/// witness is size-minimal.
TightnessCertificate certify_gap_at_most(const Graph& g, const CliquePartition& p, int k, int clique_bound);

struct Theorem3Report {
  bool has_k_tight_partition = false;        // some clique partition is k-tight
  bool has_k_tight_alpha_partition = false;  // some alpha-clique partition is k-tight
  bool all_alpha_partitions_k_tight = false;
  bool gap_at_most_k_minus_1 = false;
  long long partitions_checked = 0;
  long long alpha_partitions_checked = 0;

  bool consistent() const {
    return has_k_tight_partition == has_k_tight_alpha_partition &&
           has_k_tight_partition == all_alpha_partitions_k_tight &&
           has_k_tight_partition == gap_at_most_k_minus_1;
  }
};

/// Evaluates the four characterizations independently over all clique
/// partitions of a semi-perfect graph (n capped by partition_cap).
Theorem3Report theorem3_equivalence_check(const Graph& g, int k, int partition_cap = 9);

/// Enumerates every partition of V(g) into cliques exactly once; callback
/// returns false to stop.
void for_each_clique_partition(const Graph& g, const std::function<bool(const CliquePartition&)>& emit);

}  // namespace indgap
