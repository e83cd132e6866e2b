#pragma once

#include <functional>
#include <vector>

#include "vdw/energies.hpp"

namespace vdw {

// Grid and sweep evaluation. Every grid point is an independent pure
// evaluation, so the parallel path must reproduce the serial reference
// bit for bit; tests and the benchmark compare the two.

enum class Spacing { linear, logarithmic };

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int points = 2;
  Spacing spacing = Spacing::linear;

  std::vector<double> make() const;
};

enum class Execution { serial, parallel };

// Thread cap from the VDW_THREADS environment variable; 0 means
// "implementation default" (all available threads).
int thread_cap_from_env();

// Runs body(i) for i in [0, n). Execution::parallel distributes the
// indices over OpenMP threads (capped by max_threads when > 0); results
// must be written into per-index slots by the caller.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                    Execution exec, int max_threads = 0);

struct SweepRow {
  double separation;
  EnergyBreakdown breakdown;
};

// Energy breakdown at every separation in `grid`; rows in grid order.
std::vector<SweepRow> sweep_separation(const InteractionQuery& base,
                                       const std::vector<double>& grid,
                                       Execution exec, int max_threads = 0);

// d_ratio on an r grid for several coupling values; result[i][j] is
// D(r_grid[i], couplings[j]).
std::vector<std::vector<QuadratureResult>> dratio_grid(
    const std::vector<double>& r_grid, const std::vector<double>& couplings,
    const QuadratureConfig& cfg, Execution exec, int max_threads = 0);

}  // namespace vdw
