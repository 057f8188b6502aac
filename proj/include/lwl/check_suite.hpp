#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lwl/inequalities.hpp"

namespace lwl {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int count = 20;        // instances per randomized family
  std::string only;      // substring filter on check names ("" = everything)
  double T = 0.0;        // override for the Ingham interval length (0 = preset sweep)
  double tol = kCheckTol;
};

// The deterministic inequality suite behind the check subcommand: Hilbert and
// Ingham families on seeded random unit-gap instances, the three headline
// lower bounds, kernel baselines, curve length, and the periodization chain.
std::vector<CheckResult> run_check_suite(const SuiteConfig& cfg = {});

}  // namespace lwl
