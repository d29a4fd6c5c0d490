#include "indgap/graph.hpp"

#include <string>

namespace indgap {

namespace {

void check_order(long long n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  if (n > kMaxVertices) throw CapacityError("graph exceeds vertex cap of " + std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  n_ = n;
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loop not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
  Graph g;
  check_order(static_cast<long long>(adj.size()));
  g.n_ = static_cast<int>(adj.size());
  for (int v = 0; v < g.n_; ++v) {
    if (adj[v].size() != g.n_) throw DomainError("adjacency row has wrong universe size");
    if (adj[v].test(v)) throw DomainError("self-loop not allowed");
  }
  for (int v = 0; v < g.n_; ++v) {
    adj[v].for_each([&](int u) {
      if (!adj[u].test(v)) throw DomainError("adjacency not symmetric");
    });
  }
  g.adj_ = std::move(adj);
  return g;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw CapacityError("operation limited to graphs with at most 64 vertices");
  std::vector<std::uint64_t> masks(n_);
  for (int v = 0; v < n_; ++v) masks[v] = adj_[v].low_word();
  return masks;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  VertexSet seen(n_);
  std::vector<int> stack = {0};
  seen.set(0);
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    adj_[v].for_each([&](int u) {
      if (!seen.test(u)) {
        seen.set(u);
        ++reached;
        stack.push_back(u);
      }
    });
  }
  return reached == n_;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool ok = true;
      adj_[v].for_each([&](int u) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool Graph::is_triangle_free() const {
  for (int v = 0; v < n_; ++v) {
    bool clean = true;
    adj_[v].for_each([&](int u) {
      if (u > v && adj_[v].intersects(adj_[u])) clean = false;
    });
    if (!clean) return false;
  }
  return true;
}

namespace {

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph make_complete_bipartite(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw DomainError("cycle requires at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_copies_of_p3(int copies) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < copies; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  return Graph(3 * copies, edges);
}

int single_param(const GraphFamilySpec& spec, const char* name) {
  if (spec.params.size() != 1) throw DomainError(std::string(name) + " takes exactly one parameter");
  if (spec.params[0] < 0) throw DomainError(std::string(name) + " parameter must be nonnegative");
  return spec.params[0];
}

}  // namespace

Graph build_named(const GraphFamilySpec& spec) {
  switch (spec.family) {
    case GraphFamily::Path:
      return make_path(single_param(spec, "Path"));
    case GraphFamily::Complete:
      return make_complete(single_param(spec, "Complete"));
    case GraphFamily::CompleteBipartite: {
      if (spec.params.size() != 2) throw DomainError("CompleteBipartite takes (m, n)");
      if (spec.params[0] < 0 || spec.params[1] < 0) throw DomainError("CompleteBipartite parameters must be nonnegative");
      return make_complete_bipartite(spec.params[0], spec.params[1]);
    }
    case GraphFamily::Star:
      return make_complete_bipartite(1, single_param(spec, "Star"));
    case GraphFamily::Cycle:
      return make_cycle(single_param(spec, "Cycle"));
    case GraphFamily::CopiesOfP3:
      return make_copies_of_p3(single_param(spec, "CopiesOfP3"));
    case GraphFamily::Claw: {
      if (!spec.params.empty()) throw DomainError("Claw takes no parameters");
      return make_complete_bipartite(1, 3);
    }
    case GraphFamily::Empty:
      return Graph(single_param(spec, "Empty"), {});
  }
  throw DomainError("unknown graph family");
}

Graph path_graph(int n) { return build_named({GraphFamily::Path, {n}}); }
Graph complete_graph(int n) { return build_named({GraphFamily::Complete, {n}}); }
Graph complete_bipartite_graph(int m, int n) { return build_named({GraphFamily::CompleteBipartite, {m, n}}); }
Graph star_graph(int leaves) { return build_named({GraphFamily::Star, {leaves}}); }
Graph cycle_graph(int n) { return build_named({GraphFamily::Cycle, {n}}); }
Graph copies_of_p3(int copies) { return build_named({GraphFamily::CopiesOfP3, {copies}}); }
Graph claw_graph() { return build_named({GraphFamily::Claw, {}}); }
Graph empty_graph(int n) { return build_named({GraphFamily::Empty, {n}}); }

void require_bound(const Graph& g, const VertexSet& s) {
  if (s.size() != g.order()) throw DomainError("vertex set not bound to this graph");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  InducedSubgraph out;
  out.to_original = s.to_vector();
  out.from_original.assign(g.order(), -1);
  int m = static_cast<int>(out.to_original.size());
  for (int i = 0; i < m; ++i) out.from_original[out.to_original[i]] = i;

  std::vector<VertexSet> adj(m, VertexSet(m));
  for (int i = 0; i < m; ++i) {
    const VertexSet shared = g.neighbors(out.to_original[i]) & s;
    shared.for_each([&](int u) { adj[i].set(out.from_original[u]); });
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (int v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v).complement_set();
    adj[v].reset(v);
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.order()) + h.order();
  check_order(n);
  int total = static_cast<int>(n);
  std::vector<VertexSet> adj(total, VertexSet(total));
  for (int v = 0; v < g.order(); ++v) {
    g.neighbors(v).for_each([&](int u) { adj[v].set(u); });
  }
  for (int v = 0; v < h.order(); ++v) {
    h.neighbors(v).for_each([&](int u) { adj[g.order() + v].set(g.order() + u); });
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph add_universal_vertex(const Graph& g) {
  long long n = static_cast<long long>(g.order()) + 1;
  check_order(n);
  int total = static_cast<int>(n);
  std::vector<VertexSet> adj(total, VertexSet(total));
  for (int v = 0; v < g.order(); ++v) {
    g.neighbors(v).for_each([&](int u) { adj[v].set(u); });
    adj[v].set(total - 1);
    adj[total - 1].set(v);
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace indgap
