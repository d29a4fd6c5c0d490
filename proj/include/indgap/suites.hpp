#pragma once

#include <string>
#include <vector>

#include "indgap/exec.hpp"

namespace indgap {

struct SuiteResult {
  std::string name;
  std::string description;
  bool pass = false;
  long long checked = 0;  // graphs (or graph/parameter pairs) that ran to a verdict
  long long skipped = 0;  // inapplicable items (e.g. not semi-perfect)
  std::string failure;    // first counterexample, empty on pass
  double millis = 0;
};

/// Exhaustive verification suites. Each one checks a characterization or
/// reduction claim against the exact oracles over every graph up to the
/// given order; failures name the counterexample by graph6 string.
SuiteResult suite_thm3(int max_n, Exec exec);    // four-way partition equivalence, connected semi-perfect
SuiteResult suite_cor4(int max_n, Exec exec);    // gap via tightness == oracle gap, semi-perfect
SuiteResult suite_thm4(int max_n, Exec exec);    // bounded-witness certification vs reference, triangle-free
SuiteResult suite_thm7(int max_n, Exec exec);    // {claw,2P3}-freeness == hereditary gap <= 1
SuiteResult suite_miner(Exec exec);              // forbidden-subgraph mining at fixed scales
SuiteResult suite_gadget(int max_n, Exec exec);  // five-edge-kind gadget claims, k in {2,3}
SuiteResult suite_thm10(int max_n, Exec exec);   // universal-vertex reduction iff, k in {2,3}
SuiteResult suite_cor8(int max_n, Exec exec);    // independent domination pipeline == oracle
SuiteResult suite_prop1(int max_n, int max_leaves, Exec exec);  // disjoint-union additivity + star iff
SuiteResult suite_lemmas(int max_n, Exec exec);  // symmetric-difference structure of maximal-IS pairs

/// All ten suites at their contract scales.
std::vector<SuiteResult> run_acceptance(Exec exec);

std::vector<std::string> suite_names();

/// max_n < 0 selects the suite's contract scale. Unknown names throw
/// DomainError.
SuiteResult run_suite_by_name(const std::string& name, int max_n, Exec exec);

}  // namespace indgap
