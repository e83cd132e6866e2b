#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vdw/quadrature.hpp"
#include "vdw/sweep.hpp"

namespace vdw {

// Built-in validation suite: analytic limits, cross-derivation equivalence,
// trace identities, sign and structure properties. Each check compares a
// computed value against an independent reference at a fixed tolerance.

struct CheckResult {
  std::string name;
  double expected = 0.0;
  double got = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;
};

struct ValidateOptions {
  bool quick = false;  // smaller grids and fewer random draws
  QuadratureConfig quadrature{};
  Execution exec = Execution::parallel;
  int max_threads = 0;
};

std::vector<CheckResult> run_validation(const ValidateOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// One line per check: pass/fail, name, expected, got, tol, detail.
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace vdw
