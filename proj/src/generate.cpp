#include "indgap/generate.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "indgap/graph_io.hpp"

namespace indgap {

namespace {

constexpr int kGenerationCeiling = 12;

Graph extend(const Graph& parent, std::uint64_t mask) {
  const int n = parent.order() + 1;
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (int v = 0; v + 1 < n; ++v) {
    parent.neighbors(v).for_each([&](int u) { adj[v].set(u); });
  }
  for (std::uint64_t t = mask; t; t &= t - 1) {
    int u = std::countr_zero(t);
    adj[u].set(n - 1);
    adj[n - 1].set(u);
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace

std::vector<Graph> generate_graphs(int max_n, const std::function<bool(const Graph&)>& keep, Exec exec) {
  if (max_n < 1) throw DomainError("max_n must be positive");
  if (max_n > kGenerationCeiling) {
    throw CapacityError("exhaustive generation limited to " + std::to_string(kGenerationCeiling) + " vertices");
  }

  std::vector<Graph> out;
  std::vector<std::string> level;
  {
    Graph k1 = complete_graph(1);
    if (!keep || keep(k1)) level.push_back(to_graph6(k1));
  }

  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> parents;
    parents.reserve(level.size());
    for (const auto& s : level) {
      parents.push_back(parse_graph6(s));
      out.push_back(parents.back());
    }
    if (n == max_n || parents.empty()) break;

    // every (n+1)-vertex graph of the class arises from some canonical
    // n-vertex parent by attaching one vertex; duplicates are removed by
    // canonical form
    const long long total = static_cast<long long>(parents.size()) << n;
    std::vector<std::string> found;
    std::string failure;

#ifdef _OPENMP
#pragma omp parallel if (exec == Exec::parallel)
    {
      std::vector<std::string> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long item = 0; item < total; ++item) {
        try {
          const Graph& parent = parents[item >> n];
          const std::uint64_t mask = item & ((std::uint64_t{1} << n) - 1);
          Graph child = extend(parent, mask);
          if (keep && !keep(child)) continue;
          local.push_back(canonical_form(child).graph6);
        } catch (const std::exception& e) {
#pragma omp critical
          failure = e.what();
        }
      }
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
#else
    (void)exec;
    for (long long item = 0; item < total; ++item) {
      const Graph& parent = parents[item >> n];
      const std::uint64_t mask = item & ((std::uint64_t{1} << n) - 1);
      Graph child = extend(parent, mask);
      if (keep && !keep(child)) continue;
      found.push_back(canonical_form(child).graph6);
    }
#endif
    if (!failure.empty()) throw Error("generation filter failed: " + failure);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    level = std::move(found);
  }
  return out;
}

std::vector<long long> count_graphs(int max_n) {
  std::vector<long long> counts(max_n + 1, 0);
  for (const Graph& g : generate_graphs(max_n)) ++counts[g.order()];
  return counts;
}

}  // namespace indgap
