#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "indgap/bitset.hpp"
#include "indgap/errors.hpp"

namespace indgap {

/// Hard ceiling on graph order; adjacency is a dense bitset per vertex, so
/// this bounds memory at a few megabytes per graph.
inline constexpr int kMaxVertices = 8192;

/// Immutable simple undirected graph on vertices 0..n-1 with per-vertex
/// neighbor bitsets.
class Graph {
public:
  Graph() = default;

  Graph(int n, std::span<const std::pair<int, int>> edges);

  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  /// Takes ownership of prebuilt rows; validates symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<VertexSet> adj);

  int order() const { return n_; }
  long long edge_count() const;

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph&) const = default;

  /// One neighbor mask per vertex; requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  bool is_connected() const;
  bool is_bipartite() const;
  bool is_triangle_free() const;

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

enum class GraphFamily { Path, Complete, CompleteBipartite, Star, Cycle, CopiesOfP3, Claw, Empty };

struct GraphFamilySpec {
  GraphFamily family;
  std::vector<int> params;
};

/// Canonical labeled instance of a named family. Paths and cycles are labeled
/// in traversal order, stars have center 0, mP3 is laid out as consecutive
/// triples with the middle vertex second.
Graph build_named(const GraphFamilySpec& spec);

Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int leaves);
Graph cycle_graph(int n);
Graph copies_of_p3(int copies);
Graph claw_graph();
Graph empty_graph(int n);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new index -> original vertex (ascending)
  std::vector<int> from_original;  // original vertex -> new index, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_universal_vertex(const Graph& g);

/// Throws DomainError unless s belongs to g's vertex universe.
void require_bound(const Graph& g, const VertexSet& s);

}  // namespace indgap
