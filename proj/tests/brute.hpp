#pragma once

// Test-only oracles: naive subset and permutation scans, kept independent of
// the library's search implementations so they can vouch for them.

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "indgap/graph.hpp"

namespace brute {

using indgap::Graph;

inline bool independent_in(const Graph& g, unsigned mask) {
  for (int v = 0; v < g.order(); ++v) {
    if (!(mask >> v & 1)) continue;
    for (int u = v + 1; u < g.order(); ++u) {
      if ((mask >> u & 1) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline bool maximal_independent_in(const Graph& g, unsigned mask, unsigned universe) {
  if (!independent_in(g, mask)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!(universe >> v & 1) || (mask >> v & 1)) continue;
    bool addable = true;
    for (int u = 0; u < g.order(); ++u) {
      if ((mask >> u & 1) && g.adjacent(u, v)) addable = false;
    }
    if (addable) return false;
  }
  return true;
}

inline bool dominates_rest(const Graph& g, unsigned mask, unsigned universe) {
  for (int v = 0; v < g.order(); ++v) {
    if (!(universe >> v & 1) || (mask >> v & 1)) continue;
    bool hit = false;
    for (int u = 0; u < g.order(); ++u) {
      if ((mask >> u & 1) && g.adjacent(u, v)) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

inline std::vector<unsigned> maximal_independent_sets(const Graph& g, unsigned universe) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
    if ((mask & ~universe) == 0 && maximal_independent_in(g, mask, universe)) out.push_back(mask);
  }
  return out;
}

inline std::vector<unsigned> maximal_independent_sets(const Graph& g) {
  return maximal_independent_sets(g, (1u << g.order()) - 1);
}

inline int alpha_in(const Graph& g, unsigned universe) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
    if ((mask & ~universe) == 0 && independent_in(g, mask)) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline int alpha(const Graph& g) { return alpha_in(g, (1u << g.order()) - 1); }

inline int idom_in(const Graph& g, unsigned universe) {
  int best = g.order() + 1;
  for (unsigned mask : maximal_independent_sets(g, universe)) best = std::min(best, std::popcount(mask));
  return best;
}

inline int idom(const Graph& g) { return idom_in(g, (1u << g.order()) - 1); }

inline int gap(const Graph& g) { return alpha(g) - idom(g); }

inline int omega(const Graph& g) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
    bool clique = true;
    for (int v = 0; v < g.order() && clique; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int u = v + 1; u < g.order(); ++u) {
        if ((mask >> u & 1) && !g.adjacent(u, v)) clique = false;
      }
    }
    if (clique) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Minimum number of cliques covering V(G): assign each vertex a group index,
// groups must be cliques, first-fit symmetry break on group numbering.
inline bool clique_partition_with(const Graph& g, int groups, int v, std::vector<int>& assign) {
  if (v == g.order()) return true;
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, assign[u] + 1);
  for (int c = 0; c < std::min(groups, used + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u) {
      if (assign[u] == c && !g.adjacent(u, v)) ok = false;
    }
    if (!ok) continue;
    assign[v] = c;
    if (clique_partition_with(g, groups, v + 1, assign)) return true;
  }
  return false;
}

inline int theta(const Graph& g) {
  for (int t = 1; t <= g.order(); ++t) {
    std::vector<int> assign(g.order(), -1);
    if (clique_partition_with(g, t, 0, assign)) return t;
  }
  return g.order();
}

inline int hereditary_gap(const Graph& g) {
  int best = 0;
  for (unsigned sub = 1; sub < (1u << g.order()); ++sub) {
    best = std::max(best, alpha_in(g, sub) - idom_in(g, sub));
  }
  return best;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int v = 0; v < n && match; ++v) {
      for (int u = v + 1; u < n; ++u) {
        if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) {
          match = false;
          break;
        }
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Independent graph6 encoder (single-byte header range).
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace brute
