#include "indgap/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "indgap/detail/mask_ops.hpp"
#include "indgap/oracles.hpp"

namespace indgap {

namespace {

constexpr long long kMisBudget = 1 << 24;

std::vector<std::uint64_t> clique_masks(const CliquePartition& p) {
  std::vector<std::uint64_t> out(p.size());
  for (int j = 0; j < p.size(); ++j) out[j] = p.clique(j).low_word();
  return out;
}

std::vector<std::uint64_t> enumerate_mis_masks(const Graph& g) {
  auto adj = g.adjacency_masks();
  detail::MaskView view{adj.data(), g.order()};
  std::vector<std::uint64_t> mis;
  detail::for_each_mis(view, view.all(), [&](std::uint64_t s) {
    mis.push_back(s);
    return static_cast<long long>(mis.size()) < kMisBudget;
  });
  if (static_cast<long long>(mis.size()) >= kMisBudget) {
    throw CapacityError("maximal independent set enumeration exceeded budget");
  }
  return mis;
}

// Lexicographically next k-combination over {0,...,l-1}; false when done.
bool next_combination(std::vector<int>& c, int l) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < l - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return cap;  // saturate; such scans are infeasible anyway
  }
  return static_cast<std::uint64_t>(r);
}

// Rank -> lexicographic k-combination of {0,...,l-1}.
void unrank_combination(int l, int k, std::uint64_t rank, std::vector<int>& out) {
  out.resize(k);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = next;; ++v) {
      std::uint64_t below = binomial(l - v - 1, k - i - 1);
      if (rank < below) {
        out[i] = v;
        next = v + 1;
        break;
      }
      rank -= below;
    }
  }
}

// First maximal independent set (in enumeration order) avoiding `avoid`,
// or -1.
int first_avoiding(const std::vector<std::uint64_t>& mis, std::uint64_t avoid) {
  for (std::size_t i = 0; i < mis.size(); ++i) {
    if (!(mis[i] & avoid)) return static_cast<int>(i);
  }
  return -1;
}

TightnessCertificate make_failure(const Graph& g, const std::vector<int>& subset, std::uint64_t witness) {
  TightnessCertificate cert;
  cert.verdict = false;
  cert.witness_cliques = subset;
  cert.witness_set = VertexSet::from_mask(g.order(), witness);
  return cert;
}

}  // namespace

bool validate_partition(const Graph& g, const CliquePartition& p) {
  if (p.graph_order() != g.order()) return false;
  VertexSet covered(g.order());
  for (const auto& c : p.cliques()) {
    if (c.empty()) return false;
    if (covered.intersects(c)) return false;
    if (!is_clique(g, c)) return false;
    covered |= c;
  }
  return covered == g.vertices();
}

TightnessCertificate is_k_tight(const Graph& g, const CliquePartition& p, int k, Exec exec) {
  if (!validate_partition(g, p)) throw DomainError("not a valid clique partition");
  const int l = p.size();
  if (k < 1 || k > l) throw DomainError("k must satisfy 1 <= k <= partition size");

  const auto mis = enumerate_mis_masks(g);
  const auto cliques = clique_masks(p);

  auto union_of = [&](const std::vector<int>& subset) {
    std::uint64_t u = 0;
    for (int j : subset) u |= cliques[j];
    return u;
  };

  if (exec == Exec::serial) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    do {
      int hit = first_avoiding(mis, union_of(subset));
      if (hit >= 0) return make_failure(g, subset, mis[hit]);
    } while (next_combination(subset, l));
    TightnessCertificate cert;
    cert.verdict = true;
    cert.witness_set = VertexSet(g.order());
    return cert;
  }

  // Parallel mode: scan blocks of combination ranks; the lowest failing rank
  // wins, so the certificate matches the serial one.
  const std::uint64_t total = binomial(l, k);
  const std::uint64_t block = 1 << 12;
  for (std::uint64_t base = 0; base < total; base += block) {
    const std::uint64_t end = std::min(total, base + block);
    std::uint64_t found = ~std::uint64_t{0};
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<int> subset;
      std::uint64_t local = ~std::uint64_t{0};
#pragma omp for nowait
      for (long long rank = static_cast<long long>(base); rank < static_cast<long long>(end); ++rank) {
        unrank_combination(l, k, rank, subset);
        if (first_avoiding(mis, union_of(subset)) >= 0 && static_cast<std::uint64_t>(rank) < local) {
          local = rank;
        }
      }
#pragma omp critical
      if (local < found) found = local;
    }
#else
    std::vector<int> subset;
    for (std::uint64_t rank = base; rank < end && found == ~std::uint64_t{0}; ++rank) {
      unrank_combination(l, k, rank, subset);
      if (first_avoiding(mis, union_of(subset)) >= 0) found = rank;
    }
#endif
    if (found != ~std::uint64_t{0}) {
      std::vector<int> subset;
      unrank_combination(l, k, found, subset);
      int hit = first_avoiding(mis, union_of(subset));
      return make_failure(g, subset, mis[hit]);
    }
  }
  TightnessCertificate cert;
  cert.verdict = true;
  cert.witness_set = VertexSet(g.order());
  return cert;
}

std::optional<CliquePartition> find_alpha_clique_partition(const Graph& g) {
  if (g.order() < 1) throw DomainError("alpha-clique partition undefined on the empty graph");
  int alpha = independence_number(g);
  CliqueCover cover = minimum_clique_cover(g);
  if (cover.theta != alpha) return std::nullopt;
  std::sort(cover.cliques.begin(), cover.cliques.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.lowest() < b.lowest(); });
  return CliquePartition(g.order(), std::move(cover.cliques));
}

int gap_via_tightness(const Graph& g) {
  auto partition = find_alpha_clique_partition(g);
  if (!partition) throw DomainError("graph is not semi-perfect");
  for (int k = 1; k <= partition->size(); ++k) {
    if (is_k_tight(g, *partition, k).verdict) return k - 1;
  }
  // unreachable: the union of all cliques is V(G), met by every maximal set
  throw Error("no tight level found");
}

TightnessCertificate certify_gap_at_most(const Graph& g, const CliquePartition& p, int k, int clique_bound) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (clique_bound < 2) throw DomainError("clique bound must be at least 2");
  if (!validate_partition(g, p)) throw DomainError("not a valid clique partition");
  if (p.size() != independence_number(g)) throw DomainError("not an alpha-clique partition");
  if (int w = clique_number(g); w > clique_bound - 1) {
    throw DomainError("clique number " + std::to_string(w) + " exceeds the bound " +
                      std::to_string(clique_bound - 1));
  }

  const int n = g.order();
  const auto adj = g.adjacency_masks();
  const auto cliques = clique_masks(p);
  const int l = p.size();
  const int max_size = (k + 1) * (clique_bound - 1);

  std::vector<int> chosen;
  std::uint64_t chosen_mask = 0;

  // Counts cliques disjoint from the current set whose union it dominates;
  // fills `avoided` with the first k+1 such indices.
  std::vector<int> avoided;
  auto witnesses_failure = [&]() {
    avoided.clear();
    for (int j = 0; j < l && static_cast<int>(avoided.size()) < k + 1; ++j) {
      if (cliques[j] & chosen_mask) continue;
      bool dominated = true;
      for (std::uint64_t t = cliques[j]; t; t &= t - 1) {
        if (!(adj[detail::low_bit(t)] & chosen_mask)) {
          dominated = false;
          break;
        }
      }
      if (dominated) avoided.push_back(j);
    }
    return static_cast<int>(avoided.size()) == k + 1;
  };

  std::function<bool(int, int)> extend = [&](int from, int remaining) -> bool {
    if (remaining == 0) return witnesses_failure();
    for (int v = from; v < n; ++v) {
      if (adj[v] & chosen_mask) continue;
      if (chosen_mask & detail::bit(v)) continue;
      chosen.push_back(v);
      chosen_mask |= detail::bit(v);
      if (extend(v + 1, remaining - 1)) return true;
      chosen.pop_back();
      chosen_mask &= ~detail::bit(v);
    }
    return false;
  };

  for (int size = 1; size <= max_size; ++size) {
    if (extend(0, size)) {
      TightnessCertificate cert;
      cert.verdict = false;
      cert.witness_cliques = avoided;
      cert.witness_set = VertexSet::from_mask(n, chosen_mask);
      return cert;
    }
  }
  TightnessCertificate cert;
  cert.verdict = true;
  cert.witness_set = VertexSet(n);
  return cert;
}

void for_each_clique_partition(const Graph& g, const std::function<bool(const CliquePartition&)>& emit) {
  const int n = g.order();
  std::vector<VertexSet> parts;
  bool stopped = false;

  // Assign vertices in index order: each vertex joins a compatible existing
  // clique or starts a new one, so every partition appears exactly once.
  // Deeper calls grow and shrink `parts`, so index access only.
  std::function<void(int)> assign = [&](int v) {
    if (stopped) return;
    if (v == n) {
      if (!emit(CliquePartition(n, parts))) stopped = true;
      return;
    }
    const std::size_t existing = parts.size();
    for (std::size_t idx = 0; idx < existing; ++idx) {
      if (parts[idx].subset_of(g.neighbors(v))) {
        parts[idx].set(v);
        assign(v + 1);
        parts[idx].reset(v);
        if (stopped) return;
      }
    }
    parts.emplace_back(n);
    parts.back().set(v);
    assign(v + 1);
    parts.pop_back();
  };
  assign(0);
}

Theorem3Report theorem3_equivalence_check(const Graph& g, int k, int partition_cap) {
  if (k < 1) throw DomainError("k must be positive");
  if (g.order() > partition_cap) {
    throw CapacityError("partition enumeration limited to " + std::to_string(partition_cap) + " vertices");
  }
  GapReport report = gap_report(g);
  if (!report.semi_perfect) throw DomainError("graph is not semi-perfect");

  const auto mis = enumerate_mis_masks(g);

  // A partition fails k-tightness iff some maximal independent set misses
  // at least k of its cliques (k-subsets scanned implicitly).
  auto tight = [&](const CliquePartition& p) {
    if (k > p.size()) return true;  // no k cliques to avoid
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    do {
      std::uint64_t u = 0;
      for (int j : subset) u |= p.clique(j).low_word();
      if (first_avoiding(mis, u) >= 0) return false;
    } while (next_combination(subset, p.size()));
    return true;
  };

  Theorem3Report out;
  out.gap_at_most_k_minus_1 = report.gap <= k - 1;
  out.all_alpha_partitions_k_tight = true;
  for_each_clique_partition(g, [&](const CliquePartition& p) {
    ++out.partitions_checked;
    bool t = tight(p);
    if (t) out.has_k_tight_partition = true;
    if (p.size() == report.alpha) {
      ++out.alpha_partitions_checked;
      if (t) {
        out.has_k_tight_alpha_partition = true;
      } else {
        out.all_alpha_partitions_k_tight = false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace indgap
