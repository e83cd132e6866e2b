#pragma once

#include <functional>

#include "vdw/errors.hpp"

namespace vdw {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_depth = 48;
  // Panels whose error estimate falls below this are never refined further.
  // Kept well under abs_tol so stalled panels cannot add up to a miss.
  double tail_threshold = 1e-17;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_threshold > 0.0))
      throw DomainError("QuadratureConfig: tolerances must be > 0");
    if (max_depth < 4)
      throw DomainError("QuadratureConfig: max_depth must be >= 4");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Integral of f over (0, inf) for integrands with exponential or algebraic
// (at least u^-2) decay. `scale_hint` sets the substitution u = u0*t/(1-t);
// it should match the scale of the integrand's dominant support. Adaptive
// bisection with a nested Gauss(7)/Kronrod(15) pair; the per-panel error
// estimate is |K15 - G7|. Deterministic: identical inputs give bit-identical
// results. Never returns a silently unconverged value; check `converged`.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double scale_hint,
                                         const QuadratureConfig& cfg = {});

// Same nested rule applied once to [a, b] without subdivision.
// Exposed for the benchmark and for tests of the rule itself.
struct PanelEstimate {
  double value;
  double error;
};
PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a,
                               double b);

}  // namespace vdw
