#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace indgap::detail {

/// Adjacency of a graph with at most 64 vertices, one neighbor mask per
/// vertex. All kernels below operate on the subgraph induced by a submask.
struct MaskView {
  const std::uint64_t* adj;
  int n;

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
inline int popcnt(std::uint64_t x) { return std::popcount(x); }
inline int low_bit(std::uint64_t x) { return std::countr_zero(x); }

/// Non-neighbors of v inside sub (complement adjacency restricted to sub).
inline std::uint64_t co_nbrs(const MaskView& g, std::uint64_t sub, int v) {
  return sub & ~g.adj[v] & ~bit(v);
}

/// Enumerates every maximal independent set of the subgraph induced by
/// `sub` exactly once, as maximal cliques of the complement with the usual
/// pivoting scheme. Branch vertices are scanned in ascending index order and
/// pivot ties break toward the lowest index, so the emission order is
/// deterministic. The callback returns false to stop; the function returns
/// false iff it was stopped.
template <class F>
bool mis_rec(const MaskView& g, std::uint64_t sub, std::uint64_t r, std::uint64_t p, std::uint64_t x, F& emit) {
  if (!p && !x) return emit(r);
  // pivot with the most candidate non-neighbors
  int pivot = -1, best = -1;
  for (std::uint64_t t = p | x; t; t &= t - 1) {
    int u = low_bit(t);
    int c = popcnt(p & co_nbrs(g, sub, u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  std::uint64_t cand = p & ~co_nbrs(g, sub, pivot);
  for (std::uint64_t t = cand; t; t &= t - 1) {
    int v = low_bit(t);
    std::uint64_t nv = co_nbrs(g, sub, v);
    if (!mis_rec(g, sub, r | bit(v), p & nv, x & nv, emit)) return false;
    p &= ~bit(v);
    x |= bit(v);
  }
  return true;
}

template <class F>
bool for_each_mis(const MaskView& g, std::uint64_t sub, F&& emit) {
  F& ref = emit;
  return mis_rec(g, sub, 0, sub, 0, ref);
}

/// Greedy clique cover of `sub`; its size bounds the independence number.
inline int clique_cover_bound(const MaskView& g, std::uint64_t sub) {
  int cliques = 0;
  std::uint64_t rest = sub;
  while (rest) {
    int v = low_bit(rest);
    std::uint64_t clique = bit(v);
    std::uint64_t common = rest & g.adj[v];
    while (common) {
      int u = low_bit(common);
      clique |= bit(u);
      common &= g.adj[u];
    }
    rest &= ~clique;
    ++cliques;
  }
  return cliques;
}

/// Independence number of the subgraph induced by `sub`, with an optional
/// witness (always a maximum, hence maximal, independent set).
int alpha_mask(const MaskView& g, std::uint64_t sub, std::uint64_t* witness = nullptr);

/// Independent domination number (minimum maximal independent set) by
/// branch and bound; branches whose forced size reaches the incumbent are
/// abandoned.
int idom_mask(const MaskView& g, std::uint64_t sub, std::uint64_t* witness = nullptr);

/// Slow reference: full enumeration of maximal independent sets.
int idom_mask_reference(const MaskView& g, std::uint64_t sub);

inline int gap_mask(const MaskView& g, std::uint64_t sub) {
  return alpha_mask(g, sub) - idom_mask(g, sub);
}

struct MaskColoring {
  int chi = 0;
  std::vector<std::uint64_t> classes;
};

/// Exact chromatic number of the subgraph induced by `sub`, DSATUR-ordered
/// branch and bound seeded with a maximum-clique lower bound.
MaskColoring chromatic_mask(const MaskView& g, std::uint64_t sub);

}  // namespace indgap::detail
