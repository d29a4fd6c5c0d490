#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "indgap/graph_io.hpp"
#include "indgap/hereditary.hpp"
#include "indgap/json_io.hpp"
#include "indgap/oracles.hpp"
#include "indgap/partitions.hpp"
#include "indgap/reductions.hpp"
#include "indgap/suites.hpp"

namespace {

using namespace indgap;
using nlohmann::json;

constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapacity = 3;

struct Options {
  std::string input = "-";
  std::string output;
  std::string format = "graph6";
  bool as_json = false;
  bool parallel = false;
  int k = -1;
  int p = -1;
  int max_n = -1;
  int leaves = -1;
  int hereditary_cap = kDefaultHereditaryCap;
  std::string mode;
  std::string gadget;
  std::string suite = "all";
  std::string catalog_path;
};

/// GRAPH_CAP bounds the number of vertices oracle-backed commands accept.
int oracle_vertex_cap() {
  if (const char* env = std::getenv("GRAPH_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) return std::min(cap, 64);
  }
  return 64;
}

std::vector<Graph> load_input(const Options& opt) {
  GraphFormat format = opt.format == "edgelist" ? GraphFormat::edgelist : GraphFormat::graph6;
  if (opt.input == "-") return read_graphs(std::cin, format);
  std::ifstream in(opt.input);
  if (!in) throw Error("cannot open input file " + opt.input);
  return read_graphs(in, format);
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.output.empty() || opt.output == "-") return std::cout;
  file.open(opt.output);
  if (!file) throw Error("cannot open output file " + opt.output);
  return file;
}

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapacityError("graph has " + std::to_string(g.order()) + " vertices; oracle cap is " +
                        std::to_string(cap));
  }
}

int cmd_analyze(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const int cap = oracle_vertex_cap();
  const std::vector<Graph> graphs = load_input(opt);
  for (const Graph& g : graphs) check_cap(g, cap);

  std::vector<std::string> lines(graphs.size());
  std::string failure;

  // work items are independent; output is buffered back into input order
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
    try {
      const Graph& g = graphs[i];
      GapReport report = gap_report(g);
      json extra;
      if (g.order() <= opt.hereditary_cap) extra = hereditary_independence_gap(g, opt.hereditary_cap);
      std::ostringstream line;
      if (opt.as_json) {
        json obj = to_json(report);
        obj["index"] = i + 1;
        obj["n"] = g.order();
        obj["hereditary_gap"] = extra;
        line << obj.dump();
      } else {
        line << "graph " << i + 1 << " (n=" << g.order() << ", m=" << g.edge_count()
             << "): alpha=" << report.alpha << " idom=" << report.idom << " gap=" << report.gap
             << " omega=" << report.omega << " theta=" << report.theta
             << " semi-perfect=" << (report.semi_perfect ? "yes" : "no");
        if (!extra.is_null()) line << " hereditary-gap=" << extra.get<int>();
        line << " I1=" << to_json(report.max_witness).dump() << " I2=" << to_json(report.min_witness).dump();
      }
      lines[i] = line.str();
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw Error(failure);
  for (const auto& line : lines) out << line << '\n';
  return 0;
}

int cmd_check_tight(const Options& opt) {
  if (opt.k < 1) throw DomainError("check-tight requires --k >= 1");
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const int cap = oracle_vertex_cap();
  int index = 0;
  for (const Graph& g : load_input(opt)) {
    ++index;
    check_cap(g, cap);
    auto partition = find_alpha_clique_partition(g);
    json obj{{"index", index}, {"k", opt.k}};
    std::string text;
    if (!partition) {
      obj["verdict"] = nullptr;
      obj["reason"] = "inapplicable: graph is not semi-perfect";
      text = "inapplicable (not semi-perfect)";
    } else if (opt.k > partition->size()) {
      obj["verdict"] = nullptr;
      obj["reason"] = "inapplicable: k exceeds the partition size";
      text = "inapplicable (k exceeds partition size)";
    } else {
      TightnessCertificate cert =
          opt.p > 0 ? certify_gap_at_most(g, *partition, opt.k - 1, opt.p)
                    : is_k_tight(g, *partition, opt.k, opt.parallel ? Exec::parallel : Exec::serial);
      obj["partition"] = to_json(*partition);
      obj["certificate"] = to_json(cert);
      text = cert.verdict ? "tight" : "not tight, witness cliques " + json(cert.witness_cliques).dump() +
                                          " witness set " + to_json(cert.witness_set).dump();
    }
    if (opt.as_json) {
      out << obj.dump() << '\n';
    } else {
      out << "graph " << index << ": " << opt.k << "-tight? " << text << '\n';
    }
  }
  return 0;
}

int cmd_recognize(const Options& opt) {
  static const std::vector<std::string> kModes = {"gap", "hereditary", "well-covered", "semi-perfect",
                                                  "claw-2p3-free"};
  if (std::find(kModes.begin(), kModes.end(), opt.mode) == kModes.end()) {
    throw DomainError("recognize requires --mode from {gap, hereditary, well-covered, semi-perfect, claw-2p3-free}");
  }
  if ((opt.mode == "gap" || opt.mode == "hereditary") && opt.k < 0) {
    throw DomainError("mode '" + opt.mode + "' requires --k");
  }
  if (opt.mode == "gap" && opt.p < 3) throw DomainError("mode 'gap' requires --p >= 3");

  ForbiddenCatalog catalog;
  if (opt.mode == "hereditary") {
    if (!opt.catalog_path.empty()) {
      catalog = load_catalog(opt.catalog_path);
      if (catalog.k != opt.k) throw DomainError("catalog is for k=" + std::to_string(catalog.k));
    } else if (opt.k <= 1) {
      catalog = ForbiddenCatalog::known(opt.k);
    } else {
      catalog = mine_forbidden_catalog(opt.k, std::min(std::max(opt.k + 3, 7), 9), 9,
                                       opt.parallel ? Exec::parallel : Exec::serial);
    }
  }

  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  const int cap = oracle_vertex_cap();
  int index = 0;
  for (const Graph& g : load_input(opt)) {
    ++index;
    json obj{{"index", index}, {"mode", opt.mode}};
    std::string text;
    if (opt.mode == "gap") {
      check_cap(g, cap);
      auto partition = find_alpha_clique_partition(g);
      if (!partition) {
        obj["verdict"] = nullptr;
        obj["reason"] = "inapplicable: graph is not semi-perfect";
        text = "inapplicable (not semi-perfect)";
      } else if (clique_number(g) > opt.p - 1) {
        obj["verdict"] = nullptr;
        obj["reason"] = "inapplicable: clique number reaches p";
        text = "inapplicable (clique number reaches p)";
      } else {
        TightnessCertificate cert = certify_gap_at_most(g, *partition, opt.k, opt.p);
        obj["verdict"] = cert.verdict;
        obj["certificate"] = to_json(cert);
        text = cert.verdict ? "true" : "false";
      }
    } else if (opt.mode == "hereditary") {
      RecognitionResult res = recognize_hereditary_gap_at_most(g, catalog);
      obj = to_json(res);
      obj["index"] = index;
      obj["mode"] = opt.mode;
      text = res.verdict ? (res.provisional ? "true (provisional)" : "true") : "false";
    } else if (opt.mode == "well-covered") {
      check_cap(g, cap);
      bool v = is_well_covered(g);
      obj["verdict"] = v;
      text = v ? "true" : "false";
    } else if (opt.mode == "semi-perfect") {
      check_cap(g, cap);
      bool v = gap_report(g).semi_perfect;
      obj["verdict"] = v;
      text = v ? "true" : "false";
    } else {  // claw-2p3-free
      bool v = !find_induced_claw(g) && !find_induced_2p3(g);
      obj["verdict"] = v;
      text = v ? "true" : "false";
    }
    if (opt.as_json) {
      out << obj.dump() << '\n';
    } else {
      out << "graph " << index << ": " << text << '\n';
    }
  }
  return 0;
}

int cmd_mine(const Options& opt) {
  if (opt.k < 0 || opt.max_n < 1) throw DomainError("mine requires --k >= 0 and --max-n >= 1");
  ForbiddenCatalog cat = mine_forbidden_catalog(opt.k, opt.max_n, 9, opt.parallel ? Exec::parallel : Exec::serial);
  if (!opt.output.empty() && opt.output != "-") {
    save_catalog(cat, opt.output);
  } else {
    for (const auto& m : cat.members) std::cout << m << '\n';
  }
  std::cerr << "k=" << cat.k << " max_n=" << cat.max_n << " members=" << cat.members.size()
            << " complete=" << (cat.complete_flag ? "yes" : "no (provisional)")
            << " derived_bound=" << cat.derived_bound << '\n';
  return 0;
}

int cmd_reduce(const Options& opt) {
  if (opt.gadget != "prop1" && opt.gadget != "thm6" && opt.gadget != "thm10") {
    throw DomainError("reduce requires --gadget from {prop1, thm6, thm10}");
  }
  if (opt.k < 0) throw DomainError("reduce requires --k");
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const Graph& g : load_input(opt)) {
    GadgetArtifact artifact;
    if (opt.gadget == "prop1") {
      artifact = reduce_wellcovered_to_gap(g, opt.k, opt.leaves >= 0 ? opt.leaves : opt.k + 1);
    } else if (opt.gadget == "thm6") {
      artifact = build_gap1_gadget(g, opt.k);
    } else {
      artifact = reduce_is_to_hereditary_gap(g, opt.k);
    }
    out << to_json(artifact).dump() << '\n';
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  if (opt.gadget != "prop1" && opt.gadget != "thm6" && opt.gadget != "thm10") {
    throw DomainError("verify requires --gadget from {prop1, thm6, thm10}");
  }
  if (opt.k < 0) throw DomainError("verify requires --k");
  EnumerationBudget budget;
  if (const char* env = std::getenv("GRAPH_CAP")) {
    if (int cap = std::atoi(env); cap > 0) budget.max_vertices = std::min(cap, 64);
  }

  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  bool all_pass = true;
  int index = 0;
  for (const Graph& g : load_input(opt)) {
    ++index;
    json obj{{"index", index}, {"gadget", opt.gadget}, {"k", opt.k}};
    bool pass = false;
    std::string text;
    if (opt.gadget == "thm6") {
      GadgetArtifact artifact = build_gap1_gadget(g, opt.k);
      GadgetClaimsReport claims = verify_gadget_claims(artifact, g, opt.k, budget);
      pass = claims.all();
      obj["claims"] = to_json(claims);
      text = "claims a/b/c/d " + std::string(claims.idom_is_k_minus_1 ? "P" : "F") +
             (claims.gap_at_most_one ? "P" : "F") + (claims.alpha_iff ? "P" : "F") +
             (claims.wellcovered_iff ? "P" : "F");
    } else if (opt.gadget == "prop1") {
      int leaves = opt.leaves >= 0 ? opt.leaves : opt.k + 1;
      GadgetArtifact artifact = reduce_wellcovered_to_gap(g, opt.k, leaves);
      if (artifact.graph.order() > budget.max_vertices) throw CapacityError("instance exceeds the oracle budget");
      bool wc = is_well_covered(g);
      int gap = gap_report(artifact.graph).gap;
      pass = wc == (gap <= opt.k);
      obj["well_covered"] = wc;
      obj["gadget_gap"] = gap;
      obj["star_leaves"] = leaves;
      text = "well-covered=" + std::string(wc ? "yes" : "no") + " gadget gap=" + std::to_string(gap) +
             " iff " + (pass ? "holds" : "fails");
    } else {
      GadgetArtifact artifact = reduce_is_to_hereditary_gap(g, opt.k);
      if (artifact.graph.order() > kDefaultHereditaryCap) throw CapacityError("instance exceeds the hereditary cap");
      bool lhs = independence_number(g) >= opt.k;
      bool rhs = hereditary_independence_gap(artifact.graph) >= opt.k - 1;
      pass = lhs == rhs;
      obj["alpha_at_least_k"] = lhs;
      obj["hereditary_gap_at_least_k_minus_1"] = rhs;
      text = std::string("alpha>=k ") + (lhs ? "yes" : "no") + ", hereditary>=k-1 " + (rhs ? "yes" : "no");
    }
    obj["pass"] = pass;
    all_pass = all_pass && pass;
    if (opt.as_json) {
      out << obj.dump() << '\n';
    } else {
      out << "graph " << index << ": " << (pass ? "PASS " : "FAIL ") << text << '\n';
    }
  }
  return all_pass ? 0 : kExitSuiteFailure;
}

int cmd_selftest(const Options& opt) {
  Exec exec = opt.parallel ? Exec::parallel : Exec::serial;
  std::vector<SuiteResult> results;
  if (opt.suite == "all") {
    if (opt.max_n >= 0) throw DomainError("--max-n applies to a single suite, not 'all'");
    results = run_acceptance(exec);
  } else {
    results.push_back(run_suite_by_name(opt.suite, opt.max_n, exec));
  }
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.description << " (checked=" << r.checked
              << " skipped=" << r.skipped << " " << static_cast<long long>(r.millis) << "ms)";
    if (!r.pass) std::cout << "\n     counterexample: " << r.failure;
    std::cout << '\n';
  }
  return all_pass ? 0 : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independence gap toolkit: exact gap reports, clique-partition tightness certificates,\n"
               "forbidden-subgraph recognition of hereditary gap, and hardness-reduction gadgets"};
  app.require_subcommand(1);

  Options opt;

  auto add_io = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("input", opt.input, "input path or '-' for stdin")->capture_default_str();
    if (with_format) {
      cmd->add_option("--format", opt.format, "graph6 | edgelist")
          ->check(CLI::IsMember({"graph6", "edgelist"}))
          ->capture_default_str();
    }
    cmd->add_option("-o,--output", opt.output, "output path (default stdout)");
    cmd->add_flag("--json", opt.as_json, "line-delimited JSON output");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "exact gap report per input graph");
  add_io(analyze);
  analyze->add_flag("--parallel", opt.parallel, "process graphs across threads");
  analyze->add_option("--hereditary-cap", opt.hereditary_cap, "order cap for the hereditary-gap field")
      ->capture_default_str();

  CLI::App* check = app.add_subcommand("check-tight", "test k-tightness of an alpha-clique partition");
  add_io(check);
  check->add_option("-k,--k", opt.k, "tightness level")->required();
  check->add_option("-p,--p", opt.p, "use the bounded-witness search for K_p-free graphs");
  check->add_flag("--parallel", opt.parallel, "parallel subset scan");

  CLI::App* recognize = app.add_subcommand("recognize", "boolean recognition per input graph");
  add_io(recognize);
  recognize->add_option("--mode", opt.mode, "gap | hereditary | well-covered | semi-perfect | claw-2p3-free")
      ->required();
  recognize->add_option("-k,--k", opt.k, "gap bound");
  recognize->add_option("-p,--p", opt.p, "clique bound for mode gap");
  recognize->add_option("--catalog", opt.catalog_path, "use a mined catalog file for mode hereditary");
  recognize->add_flag("--parallel", opt.parallel, "parallel mining when a catalog is built");

  CLI::App* mine = app.add_subcommand("mine", "mine the minimal forbidden subgraphs for hereditary gap k");
  mine->add_option("-k,--k", opt.k, "gap threshold")->required();
  mine->add_option("--max-n", opt.max_n, "vertex bound for the exhaustive search")->required();
  mine->add_option("-o,--output", opt.output, "catalog file (graph6 lines + .json sidecar)");
  mine->add_flag("--parallel", opt.parallel, "parallel generation");

  CLI::App* reduce = app.add_subcommand("reduce", "emit a hardness-reduction gadget per input graph");
  add_io(reduce);
  reduce->add_option("--gadget", opt.gadget, "prop1 | thm6 | thm10")->required();
  reduce->add_option("-k,--k", opt.k, "reduction parameter")->required();
  reduce->add_option("--leaves", opt.leaves, "star size for prop1 (default k+1)");

  CLI::App* verify = app.add_subcommand("verify", "check a gadget's claims with the exact oracles");
  add_io(verify);
  verify->add_option("--gadget", opt.gadget, "prop1 | thm6 | thm10")->required();
  verify->add_option("-k,--k", opt.k, "reduction parameter")->required();
  verify->add_option("--leaves", opt.leaves, "star size for prop1 (default k+1)");

  CLI::App* selftest = app.add_subcommand("selftest", "run the exhaustive verification suites");
  selftest->add_option("--suite", opt.suite, "thm3|cor4|thm4|thm7|miner|gadget|thm10|cor8|prop1|lemmas|all")
      ->capture_default_str();
  selftest->add_option("--max-n", opt.max_n, "override the suite's graph-order scale");
  selftest->add_flag("--parallel,!--serial", opt.parallel, "thread fan-out (default serial)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(check)) return cmd_check_tight(opt);
    if (app.got_subcommand(recognize)) return cmd_recognize(opt);
    if (app.got_subcommand(mine)) return cmd_mine(opt);
    if (app.got_subcommand(reduce)) return cmd_reduce(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(selftest)) return cmd_selftest(opt);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
