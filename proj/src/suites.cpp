#include "indgap/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>

#include "indgap/generate.hpp"
#include "indgap/graph_io.hpp"
#include "indgap/hereditary.hpp"
#include "indgap/oracles.hpp"
#include "indgap/partitions.hpp"
#include "indgap/reductions.hpp"

namespace indgap {

namespace {

const std::vector<Graph>& graphs_up_to(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_graphs(n)).first;
  return it->second;
}

struct Check {
  enum class Status { pass, skip, fail } status = Status::pass;
  std::string detail;

  static Check pass() { return {}; }
  static Check skip() { return {Status::skip, {}}; }
  static Check fail(std::string detail) { return {Status::fail, std::move(detail)}; }
};

using Clock = std::chrono::steady_clock;

/// Runs `check` over every graph, fanning out across threads in parallel
/// mode; records the first observed counterexample.
void sweep(const std::vector<Graph>& graphs, Exec exec, const std::function<Check(const Graph&)>& check,
           SuiteResult& result) {
  std::atomic<long long> checked{0}, skipped{0};
  std::atomic<bool> failed{false};
  std::mutex mu;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    Check c;
    try {
      c = check(graphs[i]);
    } catch (const std::exception& e) {
      c = Check::fail(std::string("exception: ") + e.what());
    }
    switch (c.status) {
      case Check::Status::pass:
        ++checked;
        break;
      case Check::Status::skip:
        ++skipped;
        break;
      case Check::Status::fail: {
        std::lock_guard<std::mutex> lock(mu);
        if (!failed.exchange(true)) result.failure = to_graph6(graphs[i]) + " : " + c.detail;
        break;
      }
    }
  }
  result.checked += checked;
  result.skipped += skipped;
  result.pass = result.failure.empty();
}

SuiteResult timed(std::string name, std::string description, const std::function<void(SuiteResult&)>& body) {
  SuiteResult result;
  result.name = std::move(name);
  result.description = std::move(description);
  auto start = Clock::now();
  try {
    body(result);
    result.pass = result.failure.empty();
  } catch (const std::exception& e) {
    result.pass = false;
    result.failure = std::string("exception: ") + e.what();
  }
  result.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

std::string set_to_string(const VertexSet& s) {
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

SuiteResult suite_thm3(int max_n, Exec exec) {
  return timed("thm3", "clique-partition tightness equivalences on connected semi-perfect graphs", [&](SuiteResult& r) {
    std::vector<Graph> corpus;
    for (const Graph& g : graphs_up_to(max_n)) {
      if (g.is_connected()) corpus.push_back(g);
    }
    sweep(corpus, exec, [&](const Graph& g) -> Check {
      GapReport report = gap_report(g);
      if (!report.semi_perfect) return Check::skip();
      for (int k = 1; k <= report.alpha; ++k) {
        Theorem3Report t = theorem3_equivalence_check(g, k, std::max(max_n, 9));
        if (!t.consistent()) {
          return Check::fail("k=" + std::to_string(k) + " statements disagree: a=" +
                             std::to_string(t.has_k_tight_partition) + " b=" +
                             std::to_string(t.has_k_tight_alpha_partition) + " c=" +
                             std::to_string(t.all_alpha_partitions_k_tight) + " d=" +
                             std::to_string(t.gap_at_most_k_minus_1));
        }
        if (t.gap_at_most_k_minus_1 != (report.gap <= k - 1)) {
          return Check::fail("k=" + std::to_string(k) + " statement (d) contradicts the oracle gap");
        }
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_cor4(int max_n, Exec exec) {
  return timed("cor4", "gap computed from partition tightness equals the oracle gap", [&](SuiteResult& r) {
    sweep(graphs_up_to(max_n), exec, [](const Graph& g) -> Check {
      GapReport report = gap_report(g);
      if (!report.semi_perfect) return Check::skip();
      int via = gap_via_tightness(g);
      if (via != report.gap) {
        return Check::fail("tightness gap " + std::to_string(via) + " != oracle gap " + std::to_string(report.gap));
      }
      return Check::pass();
    }, r);
  });
}

namespace {

Check check_certificate(const Graph& g, const CliquePartition& p, const TightnessCertificate& cert) {
  if (cert.verdict) return Check::pass();
  if (!is_independent_set(g, cert.witness_set)) return Check::fail("witness set is not independent");
  VertexSet avoided_union(g.order());
  for (int j : cert.witness_cliques) avoided_union |= p.clique(j);
  if (cert.witness_set.intersects(avoided_union)) return Check::fail("witness set meets an avoided clique");
  VertexSet extended = extend_to_maximal_independent_set(g, cert.witness_set);
  if (extended.intersects(avoided_union)) return Check::fail("greedy extension meets an avoided clique");
  return Check::pass();
}

}  // namespace

SuiteResult suite_thm4(int max_n, Exec exec) {
  return timed("thm4", "bounded-witness gap certification vs the exhaustive reference on triangle-free graphs",
               [&](SuiteResult& r) {
    std::vector<Graph> corpus;
    for (const Graph& g : graphs_up_to(max_n)) {
      if (g.is_triangle_free()) corpus.push_back(g);
    }
    sweep(corpus, exec, [](const Graph& g) -> Check {
      GapReport report = gap_report(g);
      auto partition = find_alpha_clique_partition(g);
      if (!partition) return Check::skip();  // no alpha-clique partition exists
      for (int k = 0; k <= 2; ++k) {
        TightnessCertificate cert = certify_gap_at_most(g, *partition, k, 3);
        if (cert.verdict != (report.gap <= k)) {
          return Check::fail("k=" + std::to_string(k) + " certification disagrees with the oracle gap " +
                             std::to_string(report.gap));
        }
        if (k + 1 <= partition->size()) {
          TightnessCertificate ref = is_k_tight(g, *partition, k + 1);
          if (cert.verdict != ref.verdict) {
            return Check::fail("k=" + std::to_string(k) + " certification disagrees with the reference");
          }
          Check refcheck = check_certificate(g, *partition, ref);
          if (refcheck.status == Check::Status::fail) return refcheck;
        }
        Check certcheck = check_certificate(g, *partition, cert);
        if (certcheck.status == Check::Status::fail) return certcheck;
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_thm7(int max_n, Exec exec) {
  return timed("thm7", "{claw,2P3}-freeness equals hereditary independence gap at most one", [&](SuiteResult& r) {
    sweep(graphs_up_to(max_n), exec, [](const Graph& g) -> Check {
      bool free = has_hereditary_gap_at_most_1(g);
      bool small_gap = hereditary_independence_gap(g) <= 1;
      if (free != small_gap) {
        return Check::fail(free ? "free of both but hereditary gap exceeds 1" : "contains claw/2P3 but gap <= 1");
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_miner(Exec exec) {
  return timed("miner", "forbidden-subgraph mining recovers the known minimal catalogs", [&](SuiteResult& r) {
    auto canon = [](const Graph& g) { return canonical_form(g).graph6; };

    struct Expectation {
      int k, max_n;
      std::vector<std::string> exact;    // empty means containment-only
      std::vector<std::string> contains;
      bool expect_complete;
    };
    std::vector<Expectation> plans = {
        {0, 5, {canon(path_graph(3))}, {}, true},
        {1, 8, {canon(claw_graph()), canon(copies_of_p3(2))}, {}, false},
        {2, 7, {}, {canon(star_graph(4)), canon(disjoint_union(star_graph(3), path_graph(3)))}, false},
    };

    for (const auto& plan : plans) {
      ForbiddenCatalog cat = mine_forbidden_catalog(plan.k, plan.max_n, 9, exec);
      std::string tag = "mine(" + std::to_string(plan.k) + "," + std::to_string(plan.max_n) + ")";
      if (!plan.exact.empty()) {
        std::vector<std::string> want = plan.exact;
        std::sort(want.begin(), want.end());
        if (cat.members != want) {
          r.failure = tag + " returned " + std::to_string(cat.members.size()) + " members, expected exact set of " +
                      std::to_string(want.size());
          return;
        }
      }
      for (const auto& m : plan.contains) {
        if (!cat.contains(m)) {
          r.failure = tag + " is missing expected member " + m;
          return;
        }
      }
      if (cat.complete_flag != plan.expect_complete) {
        r.failure = tag + " completeness flag is " + (cat.complete_flag ? "true" : "false");
        return;
      }
      // oracle minimality of every member
      for (const auto& member : cat.members) {
        Graph f = parse_graph6(member);
        GapReport rep = gap_report(f);
        if (rep.gap < plan.k + 1) {
          r.failure = tag + " member " + member + " has gap " + std::to_string(rep.gap);
          return;
        }
        for (int v = 0; v < f.order(); ++v) {
          VertexSet keep = f.vertices();
          keep.reset(v);
          Graph rest = induced_subgraph(f, keep).graph;
          if (gap_report(rest).gap > plan.k || hereditary_independence_gap(rest) > plan.k) {
            r.failure = tag + " member " + member + " is not deletion-minimal at vertex " + std::to_string(v);
            return;
          }
        }
        ++r.checked;
      }
    }
  });
}

SuiteResult suite_gadget(int max_n, Exec exec) {
  return timed("gadget", "five-edge-kind gadget satisfies all four hardness claims", [&](SuiteResult& r) {
    sweep(graphs_up_to(max_n), exec, [](const Graph& g) -> Check {
      for (int k = 2; k <= 3; ++k) {
        GadgetArtifact artifact = build_gap1_gadget(g, k);
        int expect = g.order() * k + k * (k - 1);
        if (artifact.graph.order() != expect) {
          return Check::fail("k=" + std::to_string(k) + " gadget has " + std::to_string(artifact.graph.order()) +
                             " vertices, expected " + std::to_string(expect));
        }
        GadgetClaimsReport claims = verify_gadget_claims(artifact, g, k);
        if (!claims.all()) {
          return Check::fail("k=" + std::to_string(k) + " claims a/b/c/d = " +
                             std::to_string(claims.idom_is_k_minus_1) + std::to_string(claims.gap_at_most_one) +
                             std::to_string(claims.alpha_iff) + std::to_string(claims.wellcovered_iff));
        }
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_thm10(int max_n, Exec exec) {
  return timed("thm10", "universal-vertex reduction links alpha to hereditary gap", [&](SuiteResult& r) {
    sweep(graphs_up_to(max_n), exec, [](const Graph& g) -> Check {
      int alpha = independence_number(g);
      for (int k = 2; k <= 3; ++k) {
        GadgetArtifact artifact = reduce_is_to_hereditary_gap(g, k);
        bool lhs = alpha >= k;
        bool rhs = hereditary_independence_gap(artifact.graph) >= k - 1;
        if (lhs != rhs) {
          return Check::fail("k=" + std::to_string(k) + " alpha=" + std::to_string(alpha) +
                             " but hereditary gap of the extension " + (rhs ? ">=" : "<") + " k-1");
        }
        if (artifact.witness) {
          const Graph star = induced_subgraph(artifact.graph, *artifact.witness).graph;
          if (!is_isomorphic(star, star_graph(k)) || gap_report(star).gap != k - 1) {
            return Check::fail("k=" + std::to_string(k) + " witness does not induce a K_{1,k} of gap k-1");
          }
        } else if (lhs) {
          return Check::fail("k=" + std::to_string(k) + " witness missing although alpha >= k");
        }
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_cor8(int max_n, Exec exec) {
  return timed("cor8", "independent domination pipeline equals the oracle on {claw,2P3}-free graphs",
               [&](SuiteResult& r) {
    auto free = [](const Graph& g) { return !find_induced_claw(g) && !find_induced_2p3(g); };
    std::vector<Graph> corpus = generate_graphs(max_n, free, exec);
    sweep(corpus, exec, [](const Graph& g) -> Check {
      int pipeline = independent_domination_claw_2p3_free(g);
      int oracle = independent_domination_number(g);
      if (pipeline != oracle) {
        return Check::fail("pipeline " + std::to_string(pipeline) + " != oracle " + std::to_string(oracle));
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_prop1(int max_n, int max_leaves, Exec exec) {
  return timed("prop1", "gap additivity over disjoint union with stars; star-size iff behavior", [&](SuiteResult& r) {
    sweep(graphs_up_to(max_n), exec, [&](const Graph& g) -> Check {
      const int gap_g = gap_report(g).gap;
      const bool wc = gap_g == 0;
      for (int m = 0; m <= max_leaves; ++m) {
        int expect = gap_g + std::max(m - 1, 0);
        int got = gap_report(disjoint_union(g, star_graph(m))).gap;
        if (got != expect) {
          return Check::fail("union with K_{1," + std::to_string(m) + "} has gap " + std::to_string(got) +
                             ", expected " + std::to_string(expect));
        }
      }
      for (int k = 0; k <= 3; ++k) {
        // with k+1 leaves the equivalence holds unconditionally
        GadgetArtifact plus = reduce_wellcovered_to_gap(g, k, k + 1);
        bool iff_plus = wc == (gap_report(plus.graph).gap <= k);
        if (!iff_plus) return Check::fail("k=" + std::to_string(k) + " iff fails with k+1 leaves");
        // with k leaves it fails exactly on graphs of gap one (k >= 1)
        GadgetArtifact flat = reduce_wellcovered_to_gap(g, k, k);
        bool iff_flat = wc == (gap_report(flat.graph).gap <= k);
        bool expect_holds = k == 0 || gap_g != 1;
        if (iff_flat != expect_holds) {
          return Check::fail("k=" + std::to_string(k) + " iff with k leaves " +
                             (iff_flat ? "holds" : "fails") + " although source gap is " + std::to_string(gap_g));
        }
      }
      return Check::pass();
    }, r);
  });
}

SuiteResult suite_lemmas(int max_n, Exec exec) {
  return timed("lemmas", "symmetric differences of maximal independent set pairs are bipartite with maximal halves",
               [&](SuiteResult& r) {
    sweep(graphs_up_to(max_n), exec, [](const Graph& g) -> Check {
      auto mis = maximal_independent_sets(g);
      for (std::size_t a = 0; a < mis.size(); ++a) {
        for (std::size_t b = a + 1; b < mis.size(); ++b) {
          VertexSet diff = mis[a] ^ mis[b];
          InducedSubgraph sub = induced_subgraph(g, diff);
          if (!sub.graph.is_bipartite()) {
            return Check::fail("symmetric difference " + set_to_string(diff) + " is not bipartite");
          }
          VertexSet only_a = mis[a] - mis[b], only_b = mis[b] - mis[a];
          VertexSet local_a(sub.graph.order()), local_b(sub.graph.order());
          only_a.for_each([&](int v) { local_a.set(sub.from_original[v]); });
          only_b.for_each([&](int v) { local_b.set(sub.from_original[v]); });
          if (!is_maximal_independent_set(sub.graph, local_a) || !is_maximal_independent_set(sub.graph, local_b)) {
            return Check::fail("halves of " + set_to_string(diff) + " are not maximal in the difference graph");
          }
          bool cross = true;
          only_a.for_each([&](int v) {
            if (!g.neighbors(v).intersects(only_b)) cross = false;
          });
          only_b.for_each([&](int v) {
            if (!g.neighbors(v).intersects(only_a)) cross = false;
          });
          if (!cross) return Check::fail("a vertex of one side has no neighbor on the other side");
        }
      }
      return Check::pass();
    }, r);

    // claw-free graphs: the difference subgraph has maximum degree <= 2
    std::vector<Graph> claw_free;
    for (const Graph& g : graphs_up_to(std::min(max_n + 1, 8))) {
      if (!find_induced_claw(g)) claw_free.push_back(g);
    }
    sweep(claw_free, exec, [](const Graph& g) -> Check {
      auto mis = maximal_independent_sets(g);
      for (std::size_t a = 0; a < mis.size(); ++a) {
        for (std::size_t b = a + 1; b < mis.size(); ++b) {
          InducedSubgraph sub = induced_subgraph(g, mis[a] ^ mis[b]);
          for (int v = 0; v < sub.graph.order(); ++v) {
            if (sub.graph.degree(v) > 2) return Check::fail("claw-free difference subgraph has degree > 2");
          }
        }
      }
      return Check::pass();
    }, r);
  });
}

std::vector<SuiteResult> run_acceptance(Exec exec) {
  std::vector<SuiteResult> results;
  results.push_back(suite_thm3(8, exec));
  results.push_back(suite_cor4(8, exec));
  results.push_back(suite_thm4(8, exec));
  results.push_back(suite_thm7(8, exec));
  results.push_back(suite_miner(exec));
  results.push_back(suite_gadget(5, exec));
  results.push_back(suite_thm10(7, exec));
  results.push_back(suite_cor8(9, exec));
  results.push_back(suite_prop1(6, 4, exec));
  results.push_back(suite_lemmas(7, exec));
  return results;
}

std::vector<std::string> suite_names() {
  return {"thm3", "cor4", "thm4", "thm7", "miner", "gadget", "thm10", "cor8", "prop1", "lemmas"};
}

SuiteResult run_suite_by_name(const std::string& name, int max_n, Exec exec) {
  auto scaled = [&](int contract) { return max_n < 0 ? contract : max_n; };
  if (name == "thm3") return suite_thm3(scaled(8), exec);
  if (name == "cor4") return suite_cor4(scaled(8), exec);
  if (name == "thm4") return suite_thm4(scaled(8), exec);
  if (name == "thm7") return suite_thm7(scaled(8), exec);
  if (name == "miner") return suite_miner(exec);
  if (name == "gadget") return suite_gadget(scaled(5), exec);
  if (name == "thm10") return suite_thm10(scaled(7), exec);
  if (name == "cor8") return suite_cor8(scaled(9), exec);
  if (name == "prop1") return suite_prop1(scaled(6), 4, exec);
  if (name == "lemmas") return suite_lemmas(scaled(7), exec);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace indgap
