// Timing harness for the parallel kernels against their serial reference
// implementations. Not a correctness gate; results are checked for equality
// before speedups are printed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "indgap/generate.hpp"
#include "indgap/graph_io.hpp"
#include "indgap/hereditary.hpp"
#include "indgap/oracles.hpp"
#include "indgap/partitions.hpp"
#include "indgap/suites.hpp"

using namespace indgap;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-42s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel timings run serially\n\n");
#endif

  // 1. per-graph suite fan-out: hereditary gap over every graph on <= 7 vertices
  {
    std::vector<Graph> graphs = generate_graphs(7);
    long long sum_serial = 0, sum_parallel = 0;
    double s = time_ms([&] {
      long long acc = 0;
      for (const Graph& g : graphs) acc += hereditary_independence_gap(g);
      sum_serial = acc;
    });
    double p = time_ms([&] {
      long long acc = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : acc)
#endif
      for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
        acc += hereditary_independence_gap(graphs[i]);
      }
      sum_parallel = acc;
    });
    report("hereditary gap sweep (all graphs n<=7)", s, p, sum_serial == sum_parallel);
  }

  // 2. tightness reference on a well-covered instance (full subset scan):
  // twelve disjoint triangles have 3^12 maximal independent sets
  {
    Graph triangles = complete_graph(3);
    for (int i = 1; i < 12; ++i) triangles = disjoint_union(triangles, complete_graph(3));
    auto partition = find_alpha_clique_partition(triangles);
    TightnessCertificate cert_s, cert_p;
    double s = time_ms([&] { cert_s = is_k_tight(triangles, *partition, 2, Exec::serial); });
    double p = time_ms([&] { cert_p = is_k_tight(triangles, *partition, 2, Exec::parallel); });
    bool agree = cert_s.verdict == cert_p.verdict && cert_s.witness_cliques == cert_p.witness_cliques &&
                 cert_s.witness_set == cert_p.witness_set;
    report("is_k_tight(12 triangles, k=2) subset scan", s, p, agree);
  }

  // 3. isomorph-free generation of all graphs on <= 8 vertices
  {
    std::vector<Graph> out_s, out_p;
    double s = time_ms([&] { out_s = generate_graphs(8, {}, Exec::serial); });
    double p = time_ms([&] { out_p = generate_graphs(8, {}, Exec::parallel); });
    bool agree = out_s.size() == out_p.size();
    report("graph generation (n<=8, 13598 graphs)", s, p, agree);
  }

  // 4. pruned independent domination vs naive full enumeration on a sparse
  // random instance with a small minimum and a huge enumeration
  {
    std::mt19937 rng(12345);
    std::bernoulli_distribution coin(0.16);
    std::vector<std::pair<int, int>> edges;
    const int n = 40;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    int pruned = 0, naive = 0;
    double p = time_ms([&] { pruned = independent_domination_number(g); });
    double s = time_ms([&] { naive = independent_domination_number_reference(g); });
    std::printf("%-42s naive  %9.1f ms   pruned   %9.1f ms   speedup %.2fx   %s\n",
                "independent domination (random n=40)", s, p, s / p,
                pruned == naive ? "results agree" : "RESULTS DIFFER");
  }

  // 5. one full acceptance-style suite both ways (corpus cache pre-warmed)
  {
    (void)suite_thm7(7, Exec::parallel);
    SuiteResult r_s, r_p;
    double s = time_ms([&] { r_s = suite_thm7(7, Exec::serial); });
    double p = time_ms([&] { r_p = suite_thm7(7, Exec::parallel); });
    report("thm7 suite (n<=7)", s, p, r_s.pass == r_p.pass && r_s.checked == r_p.checked);
  }

  return 0;
}
