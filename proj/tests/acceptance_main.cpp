// Acceptance gate: runs every exhaustive verification suite at its contract
// scale and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstring>

#include "indgap/suites.hpp"

int main(int argc, char** argv) {
  indgap::Exec exec = indgap::Exec::parallel;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--serial") == 0) exec = indgap::Exec::serial;
  }

  const auto results = indgap::run_acceptance(exec);
  bool all_pass = true;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    all_pass = all_pass && r.pass;
    std::printf("[%2d/%zu] %s  %-7s %s (checked=%lld skipped=%lld %.1fs)\n", index, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.description.c_str(), r.checked, r.skipped,
                r.millis / 1000.0);
    if (!r.pass) std::printf("        counterexample: %s\n", r.failure.c_str());
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
