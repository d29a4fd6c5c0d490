#include "indgap/reductions.hpp"

#include <string>

#include "indgap/oracles.hpp"

namespace indgap {

const char* to_string(VertexRole role) {
  switch (role) {
    case VertexRole::original: return "original";
    case VertexRole::v_type: return "v_type";
    case VertexRole::u_type: return "u_type";
    case VertexRole::star_center: return "star_center";
    case VertexRole::star_leaf: return "star_leaf";
    case VertexRole::universal: return "universal";
  }
  return "?";
}

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::column: return "column";
    case EdgeKind::row: return "row";
    case EdgeKind::diagonal: return "diagonal";
    case EdgeKind::cross: return "cross";
    case EdgeKind::g_edge: return "g_edge";
    case EdgeKind::union_part: return "union";
    case EdgeKind::universal: return "universal";
  }
  return "?";
}

GadgetArtifact reduce_wellcovered_to_gap(const Graph& g, int k, int star_leaves) {
  if (g.order() < 1) throw DomainError("source graph must be nonempty");
  if (k < 0) throw DomainError("k must be nonnegative");
  if (star_leaves != k && star_leaves != k + 1) throw DomainError("star_leaves must be k or k+1");

  GadgetArtifact out;
  out.source_n = g.order();
  out.k = k;
  out.star_leaves = star_leaves;
  out.graph = disjoint_union(g, star_graph(star_leaves));

  const int n = g.order();
  out.roles.assign(out.graph.order(), RoleEntry{});
  for (int v = 0; v < n; ++v) out.roles[v].role = VertexRole::original;
  out.roles[n].role = VertexRole::star_center;
  for (int l = 1; l <= star_leaves; ++l) out.roles[n + l].role = VertexRole::star_leaf;

  for (int v = 0; v < out.graph.order(); ++v) {
    out.graph.neighbors(v).for_each([&](int u) {
      if (u > v) out.edge_kinds.emplace_back(v, u, v < n ? EdgeKind::g_edge : EdgeKind::union_part);
    });
  }
  return out;
}

GadgetArtifact build_gap1_gadget(const Graph& g, int k) {
  if (g.order() < 1) throw DomainError("source graph must be nonempty");
  if (k < 2) throw DomainError("k must be at least 2");

  const int n = g.order();
  const long long total = static_cast<long long>(n) * k + static_cast<long long>(k) * (k - 1);
  if (total > kMaxVertices) throw CapacityError("gadget exceeds vertex cap");
  const int m = static_cast<int>(total);

  GadgetArtifact out;
  out.source_n = n;
  out.k = k;
  out.roles.assign(m, RoleEntry{});

  // v_{i,j} (source vertex i in column j) at (i-1)*k + (j-1); u_{i,j} at
  // n*k + lexicographic rank of the ordered pair (i, j), i != j, 1-based
  auto v_index = [&](int i, int j) { return (i - 1) * k + (j - 1); };
  std::vector<std::vector<int>> u_index(k + 1, std::vector<int>(k + 1, -1));
  {
    int next = n * k;
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (i == j) continue;
        u_index[i][j] = next;
        out.roles[next] = {VertexRole::u_type, i, j};
        ++next;
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) out.roles[v_index(i, j)] = {VertexRole::v_type, i, j};
  }

  std::vector<VertexSet> adj(m, VertexSet(m));
  auto connect = [&](int a, int b, EdgeKind kind) {
    if (adj[a].test(b)) return;
    adj[a].set(b);
    adj[b].set(a);
    out.edge_kinds.emplace_back(std::min(a, b), std::max(a, b), kind);
  };

  // column edges: all pairs (of either type) in the same column
  for (int col = 1; col <= k; ++col) {
    std::vector<int> column;
    for (int i = 1; i <= n; ++i) column.push_back(v_index(i, col));
    for (int i = 1; i <= k; ++i) {
      if (i != col && u_index[i][col] >= 0) column.push_back(u_index[i][col]);
    }
    for (std::size_t a = 0; a < column.size(); ++a) {
      for (std::size_t b = a + 1; b < column.size(); ++b) connect(column[a], column[b], EdgeKind::column);
    }
  }
  // row edges: v-type pairs in the same row
  for (int i = 1; i <= n; ++i) {
    for (int j1 = 1; j1 <= k; ++j1) {
      for (int j2 = j1 + 1; j2 <= k; ++j2) connect(v_index(i, j1), v_index(i, j2), EdgeKind::row);
    }
  }
  // diagonal edges: u-type pairs in different rows and different columns
  for (int i1 = 1; i1 <= k; ++i1) {
    for (int j1 = 1; j1 <= k; ++j1) {
      if (u_index[i1][j1] < 0) continue;
      for (int i2 = 1; i2 <= k; ++i2) {
        for (int j2 = 1; j2 <= k; ++j2) {
          if (u_index[i2][j2] < 0 || u_index[i2][j2] <= u_index[i1][j1]) continue;
          if (i1 != i2 && j1 != j2) connect(u_index[i1][j1], u_index[i2][j2], EdgeKind::diagonal);
        }
      }
    }
  }
  // cross edges: u_{i,j} to every v-type vertex whose column equals i
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (u_index[i][j] < 0) continue;
      for (int a = 1; a <= n; ++a) connect(u_index[i][j], v_index(a, i), EdgeKind::cross);
    }
  }
  // source edges between copies of adjacent source vertices
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!g.adjacent(a - 1, b - 1)) continue;
      for (int j1 = 1; j1 <= k; ++j1) {
        for (int j2 = 1; j2 <= k; ++j2) connect(v_index(a, j1), v_index(b, j2), EdgeKind::g_edge);
      }
    }
  }

  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

GadgetArtifact reduce_is_to_hereditary_gap(const Graph& g, int k) {
  if (g.order() < 1) throw DomainError("source graph must be nonempty");
  if (k < 2) throw DomainError("k must be at least 2");

  GadgetArtifact out;
  out.source_n = g.order();
  out.k = k;
  out.graph = add_universal_vertex(g);

  const int n = g.order();
  out.roles.assign(n + 1, RoleEntry{});
  out.roles[n].role = VertexRole::universal;

  for (int v = 0; v < n; ++v) {
    out.graph.neighbors(v).for_each([&](int u) {
      if (u > v) out.edge_kinds.emplace_back(v, u, u == n ? EdgeKind::universal : EdgeKind::g_edge);
    });
  }

  // forward-direction witness: k independent source vertices plus the new
  // vertex induce a K_{1,k} of gap k-1
  if (n <= 64) {
    GapReport r = gap_report(g);
    if (r.alpha >= k) {
      VertexSet star(n + 1);
      int taken = 0;
      r.max_witness.for_each([&](int v) {
        if (taken < k) {
          star.set(v);
          ++taken;
        }
      });
      star.set(n);
      out.witness = star;
    }
  }
  return out;
}

GadgetClaimsReport verify_gadget_claims(const GadgetArtifact& artifact, const Graph& source, int k,
                                        const EnumerationBudget& budget) {
  const Graph& gadget = artifact.graph;
  if (gadget.order() > budget.max_vertices) {
    throw CapacityError("gadget has " + std::to_string(gadget.order()) + " vertices; verification budget is " +
                        std::to_string(budget.max_vertices));
  }

  GadgetClaimsReport report;
  int min_size = gadget.order() + 1, max_size = 0;
  long long seen = 0;
  for_each_maximal_independent_set(gadget, [&](const VertexSet& s) {
    ++seen;
    int c = s.count();
    min_size = std::min(min_size, c);
    max_size = std::max(max_size, c);
    return seen < budget.max_sets;
  });
  if (seen >= budget.max_sets) {
    throw CapacityError("gadget enumeration exceeded the budget of " + std::to_string(budget.max_sets) +
                        " maximal independent sets");
  }

  report.sets_enumerated = seen;
  report.alpha_gadget = max_size;
  report.idom_gadget = min_size;
  report.alpha_source = independence_number(source);

  report.idom_is_k_minus_1 = min_size == k - 1;
  report.gap_at_most_one = max_size - min_size <= 1;
  report.alpha_iff = (report.alpha_source >= k) == (max_size >= k);
  report.wellcovered_iff = (report.alpha_source >= k) == (max_size != min_size);
  return report;
}

}  // namespace indgap
