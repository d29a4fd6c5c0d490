#include "indgap/oracles.hpp"

#include <string>

#include "indgap/detail/mask_ops.hpp"

namespace indgap {

namespace {

std::vector<std::uint64_t> oracle_masks(const Graph& g) {
  if (g.order() < 1) throw DomainError("invariant undefined on the empty graph");
  return g.adjacency_masks();  // throws CapacityError beyond 64
}

VertexSet from_mask(const Graph& g, std::uint64_t mask) { return VertexSet::from_mask(g.order(), mask); }

}  // namespace

void for_each_maximal_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& emit) {
  auto masks = oracle_masks(g);
  detail::MaskView view{masks.data(), g.order()};
  detail::for_each_mis(view, view.all(), [&](std::uint64_t s) { return emit(from_mask(g, s)); });
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

int independence_number(const Graph& g) {
  auto masks = oracle_masks(g);
  detail::MaskView view{masks.data(), g.order()};
  return detail::alpha_mask(view, view.all());
}

int independent_domination_number(const Graph& g) {
  auto masks = oracle_masks(g);
  detail::MaskView view{masks.data(), g.order()};
  return detail::idom_mask(view, view.all());
}

int independent_domination_number_reference(const Graph& g) {
  auto masks = oracle_masks(g);
  detail::MaskView view{masks.data(), g.order()};
  return detail::idom_mask_reference(view, view.all());
}

int clique_number(const Graph& g) {
  if (g.order() < 1) throw DomainError("invariant undefined on the empty graph");
  Graph co = complement(g);
  auto masks = co.adjacency_masks();
  detail::MaskView view{masks.data(), co.order()};
  return detail::alpha_mask(view, view.all());
}

CliqueCover minimum_clique_cover(const Graph& g) {
  if (g.order() < 1) throw DomainError("invariant undefined on the empty graph");
  Graph co = complement(g);
  auto masks = co.adjacency_masks();
  detail::MaskView view{masks.data(), co.order()};
  detail::MaskColoring coloring = detail::chromatic_mask(view, view.all());
  CliqueCover out;
  out.theta = coloring.chi;
  out.cliques.reserve(coloring.classes.size());
  for (auto cls : coloring.classes) out.cliques.push_back(from_mask(g, cls));
  return out;
}

GapReport gap_report(const Graph& g) {
  auto masks = oracle_masks(g);
  detail::MaskView view{masks.data(), g.order()};
  std::uint64_t all = view.all();

  GapReport r;
  std::uint64_t w1 = 0, w2 = 0;
  r.alpha = detail::alpha_mask(view, all, &w1);
  r.idom = detail::idom_mask(view, all, &w2);
  r.gap = r.alpha - r.idom;
  r.max_witness = from_mask(g, w1);
  r.min_witness = from_mask(g, w2);

  Graph co = complement(g);
  auto comasks = co.adjacency_masks();
  detail::MaskView coview{comasks.data(), co.order()};
  r.omega = detail::alpha_mask(coview, coview.all());
  r.theta = detail::chromatic_mask(coview, coview.all()).chi;
  r.semi_perfect = r.alpha == r.theta;
  return r;
}

bool is_well_covered(const Graph& g) {
  auto masks = oracle_masks(g);
  detail::MaskView view{masks.data(), g.order()};
  std::uint64_t all = view.all();
  return detail::alpha_mask(view, all) == detail::idom_mask(view, all);
}

int hereditary_independence_gap(const Graph& g, int cap) {
  if (g.order() < 1) throw DomainError("hereditary gap undefined on the empty graph");
  if (g.order() > cap) {
    throw CapacityError("hereditary gap enumeration limited to " + std::to_string(cap) +
                        " vertices; use catalog recognition beyond that");
  }
  auto masks = g.adjacency_masks();
  detail::MaskView view{masks.data(), g.order()};
  int best = 0;
  std::uint64_t full = view.all();
  for (std::uint64_t sub = full; sub; sub = (sub - 1) & full) {
    int gap = detail::gap_mask(view, sub);
    if (gap > best) best = gap;
  }
  return best;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  bool ok = true;
  s.for_each([&](int v) {
    if (g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_maximal_independent_set(const Graph& g, const VertexSet& s) {
  if (!is_independent_set(g, s)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!s.test(v) && !g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  bool ok = true;
  s.for_each([&](int v) {
    VertexSet rest = s;
    rest.reset(v);
    if (!rest.subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

bool is_dominating(const Graph& g, const VertexSet& s, const VertexSet& targets) {
  require_bound(g, s);
  require_bound(g, targets);
  bool ok = true;
  targets.for_each([&](int v) {
    if (!g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_strong_clique(const Graph& g, const VertexSet& c) {
  require_bound(g, c);
  if (c.empty() || !is_clique(g, c)) throw DomainError("argument must be a nonempty clique");
  bool strong = true;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    if (!s.intersects(c)) {
      strong = false;
      return false;
    }
    return true;
  });
  return strong;
}

VertexSet extend_to_maximal_independent_set(const Graph& g, VertexSet s) {
  require_bound(g, s);
  if (!is_independent_set(g, s)) throw DomainError("cannot extend a dependent set");
  for (int v = 0; v < g.order(); ++v) {
    if (!s.test(v) && !g.neighbors(v).intersects(s)) s.set(v);
  }
  return s;
}

}  // namespace indgap
