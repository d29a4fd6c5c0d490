#include "indgap/detail/mask_ops.hpp"

#include <array>

namespace indgap::detail {

namespace {

struct AlphaSearch {
  const MaskView& g;
  int best = 0;
  std::uint64_t best_set = 0;

  void run(std::uint64_t p, std::uint64_t r, int rsize) {
    if (!p) {
      if (rsize > best) {
        best = rsize;
        best_set = r;
      }
      return;
    }
    int cnt = popcnt(p);
    if (rsize + cnt <= best) return;
    if (cnt >= 12 && rsize + clique_cover_bound(g, p) <= best) return;

    // branch on a vertex of maximum degree within p
    int v = -1, dmax = -1;
    for (std::uint64_t t = p; t; t &= t - 1) {
      int u = low_bit(t);
      int d = popcnt(g.adj[u] & p);
      if (d > dmax) {
        dmax = d;
        v = u;
      }
    }
    if (dmax == 0) {  // p is independent, take all of it
      if (rsize + cnt > best) {
        best = rsize + cnt;
        best_set = r | p;
      }
      return;
    }
    run(p & ~(g.adj[v] | bit(v)), r | bit(v), rsize + 1);
    run(p & ~bit(v), r, rsize);
  }
};

struct IdomSearch {
  const MaskView& g;
  std::uint64_t sub;
  int best;
  std::uint64_t best_set = 0;

  bool run(std::uint64_t r, std::uint64_t p, std::uint64_t x, int rsize) {
    if (rsize >= best) return true;
    if (!p && !x) {
      best = rsize;
      best_set = r;
      return true;
    }
    if (!p) return true;
    int pivot = -1, bestc = -1;
    for (std::uint64_t t = p | x; t; t &= t - 1) {
      int u = low_bit(t);
      int c = popcnt(p & co_nbrs(g, sub, u));
      if (c > bestc) {
        bestc = c;
        pivot = u;
      }
    }
    std::uint64_t cand = p & ~co_nbrs(g, sub, pivot);
    for (std::uint64_t t = cand; t; t &= t - 1) {
      int v = low_bit(t);
      std::uint64_t nv = co_nbrs(g, sub, v);
      run(r | bit(v), p & nv, x & nv, rsize + 1);
      p &= ~bit(v);
      x |= bit(v);
    }
    return true;
  }
};

}  // namespace

int alpha_mask(const MaskView& g, std::uint64_t sub, std::uint64_t* witness) {
  AlphaSearch search{g};
  search.run(sub, 0, 0);
  if (witness) *witness = search.best_set;
  return search.best;
}

int idom_mask(const MaskView& g, std::uint64_t sub, std::uint64_t* witness) {
  IdomSearch search{g, sub, popcnt(sub) + 1};
  search.run(0, sub, 0, 0);
  if (witness) *witness = search.best_set;
  return search.best;
}

int idom_mask_reference(const MaskView& g, std::uint64_t sub) {
  int best = popcnt(sub) + 1;
  for_each_mis(g, sub, [&](std::uint64_t s) {
    int c = popcnt(s);
    if (c < best) best = c;
    return true;
  });
  return best;
}

namespace {

/// DSATUR branch and bound over the vertices of `sub`, with the vertices of
/// one maximum clique fixed to distinct colors up front.
struct ColorSearch {
  const MaskView& g;
  std::uint64_t sub;
  std::vector<int> verts;          // global indices of sub
  std::vector<int> local;          // global -> local
  std::vector<std::uint64_t> nbr;  // local adjacency masks over verts
  int m = 0;

  std::vector<int> color;  // local vertex -> color, -1 uncolored
  int best_chi = 0;
  std::vector<int> best_color;

  explicit ColorSearch(const MaskView& graph, std::uint64_t s) : g(graph), sub(s) {
    local.assign(g.n, -1);
    for (std::uint64_t t = sub; t; t &= t - 1) {
      int v = low_bit(t);
      local[v] = m++;
      verts.push_back(v);
    }
    nbr.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      for (std::uint64_t t = g.adj[verts[i]] & sub; t; t &= t - 1) nbr[i] |= std::uint64_t{1} << local[low_bit(t)];
    }
    color.assign(m, -1);
  }

  int greedy() {
    std::vector<int> tmp(m, -1);
    int used = 0;
    for (int step = 0; step < m; ++step) {
      int pick = -1, sat = -1, deg = -1;
      for (int v = 0; v < m; ++v) {
        if (tmp[v] != -1) continue;
        std::uint64_t seen = 0;
        for (std::uint64_t t = nbr[v]; t; t &= t - 1) {
          int u = low_bit(t);
          if (tmp[u] != -1) seen |= std::uint64_t{1} << tmp[u];
        }
        int s = popcnt(seen);
        int d = popcnt(nbr[v]);
        if (s > sat || (s == sat && d > deg)) {
          sat = s;
          deg = d;
          pick = v;
        }
      }
      std::uint64_t forbidden = 0;
      for (std::uint64_t t = nbr[pick]; t; t &= t - 1) {
        int u = low_bit(t);
        if (tmp[u] != -1) forbidden |= std::uint64_t{1} << tmp[u];
      }
      int c = low_bit(~forbidden);
      tmp[pick] = c;
      if (c + 1 > used) used = c + 1;
    }
    best_color = tmp;
    return used;
  }

  void branch(int colored, int used, int lb) {
    if (used >= best_chi) return;
    if (colored == m) {
      best_chi = used;
      best_color = color;
      return;
    }
    int pick = -1, sat = -1, deg = -1;
    for (int v = 0; v < m; ++v) {
      if (color[v] != -1) continue;
      std::uint64_t seen = 0;
      for (std::uint64_t t = nbr[v]; t; t &= t - 1) {
        int u = low_bit(t);
        if (color[u] != -1) seen |= std::uint64_t{1} << color[u];
      }
      int s = popcnt(seen);
      int d = popcnt(nbr[v]);
      if (s > sat || (s == sat && d > deg)) {
        sat = s;
        deg = d;
        pick = v;
      }
    }
    std::uint64_t forbidden = 0;
    for (std::uint64_t t = nbr[pick]; t; t &= t - 1) {
      int u = low_bit(t);
      if (color[u] != -1) forbidden |= std::uint64_t{1} << color[u];
    }
    int limit = used < best_chi - 1 ? used + 1 : used;  // may open one new color
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1) continue;
      color[pick] = c;
      branch(colored + 1, c + 1 > used ? c + 1 : used, lb);
      color[pick] = -1;
      if (best_chi == lb) return;
    }
  }
};

}  // namespace

MaskColoring chromatic_mask(const MaskView& g, std::uint64_t sub) {
  MaskColoring out;
  if (!sub) return out;

  ColorSearch search(g, sub);
  int ub = search.greedy();
  // lower bound: maximum clique = maximum independent set of the complement
  std::array<std::uint64_t, 64> co{};
  std::uint64_t all = g.all();
  for (int v = 0; v < g.n; ++v) co[v] = all & ~g.adj[v] & ~bit(v);
  MaskView coview{co.data(), g.n};
  std::uint64_t clique = 0;
  int lb = alpha_mask(coview, sub, &clique);

  search.best_chi = ub;
  if (ub > lb) {
    int next = 0;
    for (std::uint64_t t = clique; t; t &= t - 1) search.color[search.local[low_bit(t)]] = next++;
    search.branch(next, next, lb);
  }

  out.chi = search.best_chi;
  out.classes.assign(search.best_chi, 0);
  for (int v = 0; v < search.m; ++v) out.classes[search.best_color[v]] |= bit(search.verts[v]);
  return out;
}

}  // namespace indgap::detail
