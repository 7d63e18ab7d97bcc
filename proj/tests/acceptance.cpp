// Runs the ten acceptance criteria at their required tolerances and prints one
// PASS/FAIL line per criterion.  Exit status is zero only if all pass.

#include <cstdio>
#include <iostream>

#include "zf/verify.hpp"

int main() {
  zf::verify::SuiteConfig cfg;  // default tolerances and sample counts are the required ones
  int failures = 0;
  for (int id = 1; id <= zf::verify::kCriterionCount; ++id) {
    const auto r = zf::verify::run_criterion(id, cfg);
    std::cout << r.summary_line() << '\n';
    if (!r.detail.empty()) std::cout << "      error: " << r.detail << '\n';
    std::cout.flush();
    failures += r.passed() ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
