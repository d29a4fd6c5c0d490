#include "indgap/hereditary.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "indgap/generate.hpp"
#include "indgap/graph_io.hpp"
#include "indgap/oracles.hpp"

namespace indgap {

namespace {

// ---------------------------------------------------------------------------
// Canonical labeling: individualization-refinement. Colors are rank values;
// refinement resorts vertices by (color, multiset of neighbor colors) until
// stable. When a cell still holds several vertices, each is individualized
// in turn (twins pruned) and the smallest adjacency encoding over all leaves
// wins. The fast path packs signatures into machine words for n <= 16; the
// general path handles any order.
// ---------------------------------------------------------------------------

// n <= 16: neighbor-color counts fit in one word (16 colors x 4-bit counts).
struct FastCanon {
  int n;
  std::array<std::uint32_t, 16> adj{};

  using Code = std::pair<std::uint64_t, std::uint64_t>;
  bool have_best = false;
  Code best_code{};
  std::array<int, 16> best_perm{};

  using Colors = std::array<int, 16>;

  void refine(Colors& colors) const {
    // signature = (own color, 4-bit neighbor-color counts); counts cannot
    // overflow a nibble since a vertex has at most 15 neighbors
    std::array<std::tuple<int, std::uint64_t, int>, 16> sig;
    for (;;) {
      for (int v = 0; v < n; ++v) {
        std::uint64_t counts = 0;
        for (std::uint32_t t = adj[v]; t; t &= t - 1) {
          counts += std::uint64_t{1} << (4 * colors[std::countr_zero(t)]);
        }
        sig[v] = {colors[v], counts, v};
      }
      std::sort(sig.begin(), sig.begin() + n);
      Colors next{};
      int rank = -1;
      std::pair<int, std::uint64_t> prev{-1, 0};
      for (int i = 0; i < n; ++i) {
        auto key = std::make_pair(std::get<0>(sig[i]), std::get<1>(sig[i]));
        if (rank < 0 || key != prev) {
          ++rank;
          prev = key;
        }
        next[std::get<2>(sig[i])] = rank;
      }
      bool stable = true;
      for (int v = 0; v < n; ++v) {
        if (next[v] != colors[v]) stable = false;
      }
      if (stable) return;
      colors = next;
    }
  }

  void search(Colors colors) {
    refine(colors);

    // first cell with more than one vertex
    std::array<int, 16> cell_size{};
    for (int v = 0; v < n; ++v) ++cell_size[colors[v]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }

    if (target < 0) {
      std::array<int, 16> pos{};
      for (int v = 0; v < n; ++v) pos[colors[v]] = v;
      Code code{0, 0};
      int t = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
          if (adj[pos[i]] >> pos[j] & 1) {
            if (t < 64) {
              code.first |= std::uint64_t{1} << (63 - t);
            } else {
              code.second |= std::uint64_t{1} << (127 - t);
            }
          }
        }
      }
      if (!have_best || code < best_code) {
        have_best = true;
        best_code = code;
        best_perm = pos;
      }
      return;
    }

    std::array<int, 16> members{};
    int count = 0;
    for (int v = 0; v < n; ++v) {
      if (colors[v] == target) members[count++] = v;
    }
    for (int i = 0; i < count; ++i) {
      int v = members[i];
      bool twin = false;
      for (int j = 0; j < i && !twin; ++j) {
        int w = members[j];
        std::uint32_t strip = ~((1u << v) | (1u << w));
        if ((adj[v] & strip) == (adj[w] & strip)) twin = true;  // (v w) is an automorphism
      }
      if (twin) continue;
      // v moves just ahead of its cell; dense-rank back to 0..n-1
      Colors branched;
      std::array<int, 16> vals{};
      for (int u = 0; u < n; ++u) vals[u] = 2 * colors[u] + (u == v ? 0 : 1);
      std::array<int, 16> sorted = vals;
      std::sort(sorted.begin(), sorted.begin() + n);
      int distinct = static_cast<int>(std::unique(sorted.begin(), sorted.begin() + n) - sorted.begin());
      for (int u = 0; u < n; ++u) {
        branched[u] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.begin() + distinct, vals[u]) -
                                       sorted.begin());
      }
      search(branched);
    }
  }
};

// Any order; vector signatures, Bitset rows.
struct GeneralCanon {
  const Graph& g;
  int n;

  bool have_best = false;
  std::vector<std::uint64_t> best_code;
  std::vector<int> best_perm;

  explicit GeneralCanon(const Graph& graph) : g(graph), n(graph.order()) {}

  void refine(std::vector<int>& colors) const {
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    for (;;) {
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.assign(n + 1, 0);
        s[0] = colors[v];
        g.neighbors(v).for_each([&](int u) { ++s[1 + colors[u]]; });
      }
      for (int v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n);
      int rank = -1;
      const std::vector<int>* prev = nullptr;
      for (int v : order) {
        if (!prev || sig[v] != *prev) {
          ++rank;
          prev = &sig[v];
        }
        next[v] = rank;
      }
      if (next == colors) return;
      colors = std::move(next);
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);

    std::vector<int> cell_size(n, 0);
    for (int v = 0; v < n; ++v) ++cell_size[colors[v]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }

    if (target < 0) {
      std::vector<int> pos(n);
      for (int v = 0; v < n; ++v) pos[colors[v]] = v;
      std::vector<std::uint64_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
      std::size_t t = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
          if (g.adjacent(pos[i], pos[j])) code[t / 64] |= std::uint64_t{1} << (63 - t % 64);
        }
      }
      if (!have_best || code < best_code) {
        have_best = true;
        best_code = std::move(code);
        best_perm = std::move(pos);
      }
      return;
    }

    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (colors[v] == target) members.push_back(v);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      int v = members[i];
      bool twin = false;
      for (std::size_t j = 0; j < i && !twin; ++j) {
        int w = members[j];
        VertexSet a = g.neighbors(v), b = g.neighbors(w);
        a.reset(v);
        a.reset(w);
        b.reset(v);
        b.reset(w);
        if (a == b) twin = true;
      }
      if (twin) continue;
      // v moves just ahead of its cell; dense-rank back to 0..n-1
      std::vector<int> vals(n);
      for (int u = 0; u < n; ++u) vals[u] = 2 * colors[u] + (u == v ? 0 : 1);
      std::vector<int> sorted = vals;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<int> branched(n);
      for (int u = 0; u < n; ++u) {
        branched[u] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[u]) - sorted.begin());
      }
      search(std::move(branched));
    }
  }
};

Graph relabel(const Graph& g, const int* perm) {
  const int n = g.order();
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(perm[i], perm[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace

Graph canonical_copy(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;
  if (n <= 16) {
    FastCanon canon;
    canon.n = n;
    for (int v = 0; v < n; ++v) canon.adj[v] = static_cast<std::uint32_t>(g.neighbors(v).low_word());
    canon.search(FastCanon::Colors{});
    return relabel(g, canon.best_perm.data());
  }
  GeneralCanon canon(g);
  canon.search(std::vector<int>(n, 0));
  return relabel(g, canon.best_perm.data());
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{to_graph6(canonical_copy(g))}; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<VertexSet> contains_induced(const Graph& g, const Graph& h) {
  const int hn = h.order();
  if (hn < 1) throw DomainError("pattern graph must be nonempty");
  const int gn = g.order();
  if (hn > gn) return std::nullopt;

  // place pattern vertices in a connectivity-first order
  std::vector<int> order;
  std::vector<bool> placed(hn, false);
  for (int step = 0; step < hn; ++step) {
    int pick = -1, attach = -1, deg = -1;
    for (int u = 0; u < hn; ++u) {
      if (placed[u]) continue;
      int a = 0;
      for (int w : order) {
        if (h.adjacent(u, w)) ++a;
      }
      int d = h.degree(u);
      if (a > attach || (a == attach && d > deg)) {
        attach = a;
        deg = d;
        pick = u;
      }
    }
    order.push_back(pick);
    placed[pick] = true;
  }

  std::vector<int> image(hn, -1);  // pattern vertex -> host vertex
  VertexSet used(gn);

  std::function<bool(int)> place = [&](int depth) -> bool {
    if (depth == hn) return true;
    int u = order[depth];
    for (int w = 0; w < gn; ++w) {
      if (used.test(w) || g.degree(w) < h.degree(u)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        if (h.adjacent(u, order[d]) != g.adjacent(w, image[order[d]])) ok = false;
      }
      if (!ok) continue;
      image[u] = w;
      used.set(w);
      if (place(depth + 1)) return true;
      used.reset(w);
      image[u] = -1;
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  return used;
}

std::optional<VertexSet> find_induced_claw(const Graph& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v).to_vector();
    const int d = static_cast<int>(nbrs.size());
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (g.adjacent(nbrs[a], nbrs[b])) continue;
        for (int c = b + 1; c < d; ++c) {
          if (!g.adjacent(nbrs[a], nbrs[c]) && !g.adjacent(nbrs[b], nbrs[c])) {
            return VertexSet::of(n, {v, nbrs[a], nbrs[b], nbrs[c]});
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> find_induced_2p3(const Graph& g) { return contains_induced(g, copies_of_p3(2)); }

bool has_hereditary_gap_at_most_1(const Graph& g) {
  if (g.order() < 1) throw DomainError("undefined on the empty graph");
  return !find_induced_claw(g) && !find_induced_2p3(g);
}

bool ForbiddenCatalog::contains(const std::string& canon) const {
  return std::binary_search(members.begin(), members.end(), canon);
}

ForbiddenCatalog ForbiddenCatalog::known(int k) {
  ForbiddenCatalog cat;
  cat.k = k;
  cat.complete_flag = true;
  cat.derived_bound = forbidden_catalog_vertex_bound(k);
  if (k == 0) {
    cat.max_n = 3;
    cat.members = {canonical_form(path_graph(3)).graph6};
  } else if (k == 1) {
    cat.max_n = 6;
    cat.members = {canonical_form(claw_graph()).graph6, canonical_form(copies_of_p3(2)).graph6};
  } else {
    throw DomainError("closed-form catalogs exist only for k <= 1");
  }
  std::sort(cat.members.begin(), cat.members.end());
  return cat;
}

long long forbidden_catalog_vertex_bound(int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  const long long named = std::max<long long>(k + 3, 3LL * (k + 1));
  if (k == 0) return named;  // every component of another member would need an induced P3

  // Moore bound for one component: degree <= k+1, diameter <= 4k+1.
  const long long degree = k + 1;
  long long component = 1, layer = degree;
  for (int i = 0; i < 4 * k + 1; ++i) {
    component += layer;
    if (component > (1LL << 40)) return 1LL << 40;  // saturate; far beyond any search
    layer *= (degree - 1) > 0 ? degree - 1 : 1;
  }
  return std::max(named, static_cast<long long>(k) * component);
}

ForbiddenCatalog mine_forbidden_catalog(int k, int max_n, int generation_cap, Exec exec) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (max_n < 1) throw DomainError("max_n must be positive");
  if (max_n > generation_cap) {
    throw CapacityError("mining budget allows at most " + std::to_string(generation_cap) + " vertices");
  }

  ForbiddenCatalog cat;
  cat.k = k;
  cat.max_n = max_n;
  cat.derived_bound = forbidden_catalog_vertex_bound(k);
  cat.complete_flag = max_n >= cat.derived_bound;

  // A graph is a member iff its own gap is at least k+1 while every
  // single-vertex deletion has hereditary gap at most k (hereditary gap is
  // monotone, so this bounds every proper induced subgraph).
  auto minimal = [&](const Graph& g) {
    GapReport r = gap_report(g);
    if (r.gap < k + 1) return false;
    for (int v = 0; v < g.order(); ++v) {
      VertexSet keep = g.vertices();
      keep.reset(v);
      if (keep.empty()) return false;
      Graph rest = induced_subgraph(g, keep).graph;
      if (hereditary_independence_gap(rest) > k) return false;
    }
    return true;
  };

  for (const Graph& g : generate_graphs(max_n, {}, exec)) {
    if (minimal(g)) cat.members.push_back(to_graph6(g));  // generator output is canonical
  }
  std::sort(cat.members.begin(), cat.members.end());
  return cat;
}

RecognitionResult recognize_hereditary_gap_at_most(const Graph& g, const ForbiddenCatalog& catalog) {
  RecognitionResult out;
  for (const auto& member : catalog.members) {
    Graph f = parse_graph6(member);
    if (auto hit = contains_induced(g, f)) {
      out.verdict = false;
      out.provisional = false;  // a found member certifies the gap regardless
      out.witness_member = member;
      out.witness_vertices = *hit;
      return out;
    }
  }
  out.verdict = true;
  out.provisional = !catalog.complete_flag;
  return out;
}

namespace {

std::string describe_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

}  // namespace

int independent_domination_claw_2p3_free(const Graph& g, const IndependentDominationSolvers& solvers) {
  if (g.order() < 1) throw DomainError("undefined on the empty graph");
  if (auto claw = find_induced_claw(g)) {
    throw DomainError("input contains an induced claw on " + describe_set(*claw));
  }
  if (auto pp = find_induced_2p3(g)) {
    throw DomainError("input contains an induced 2P3 on " + describe_set(*pp));
  }
  int alpha = solvers.alpha ? solvers.alpha(g) : independence_number(g);
  bool wc = solvers.well_covered ? solvers.well_covered(g) : is_well_covered(g);
  return wc ? alpha : alpha - 1;
}

void save_catalog(const ForbiddenCatalog& catalog, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  for (const auto& m : catalog.members) out << m << '\n';
  out.close();

  nlohmann::json meta = {{"k", catalog.k},
                         {"max_n", catalog.max_n},
                         {"complete_flag", catalog.complete_flag},
                         {"derived_bound", catalog.derived_bound}};
  std::ofstream side(path + ".json");
  if (!side) throw Error("cannot open " + path + ".json for writing");
  side << meta.dump(2) << '\n';
}

ForbiddenCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  ForbiddenCatalog cat;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    parse_graph6(line);  // validate
    cat.members.push_back(line);
  }
  std::sort(cat.members.begin(), cat.members.end());

  std::ifstream side(path + ".json");
  if (!side) throw Error("missing catalog sidecar " + path + ".json");
  nlohmann::json meta = nlohmann::json::parse(side);
  cat.k = meta.at("k").get<int>();
  cat.max_n = meta.at("max_n").get<int>();
  cat.complete_flag = meta.at("complete_flag").get<bool>();
  cat.derived_bound = meta.at("derived_bound").get<long long>();
  return cat;
}

}  // namespace indgap
