#include "vdw/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vdw {

std::vector<double> GridSpec::make() const {
  if (points < 2) throw DomainError("grid: points must be >= 2");
  if (!(min < max)) throw DomainError("grid: min must be < max");
  if (spacing == Spacing::logarithmic && !(min > 0.0))
    throw DomainError("grid: log spacing requires min > 0");

  std::vector<double> g(points);
  if (spacing == Spacing::linear) {
    const double step = (max - min) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = min + step * i;
  } else {
    const double lmin = std::log(min);
    const double step = (std::log(max) - lmin) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = std::exp(lmin + step * i);
  }
  g.front() = min;
  g.back() = max;
  return g;
}

int thread_cap_from_env() {
  const char* env = std::getenv("VDW_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) return 0;
  return static_cast<int>(v);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                    Execution exec, int max_threads) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

#ifdef _OPENMP
  int threads = max_threads > 0 ? max_threads : omp_get_max_threads();
  // Exceptions cannot cross the parallel region; capture and rethrow.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
#else
  (void)max_threads;
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

std::vector<SweepRow> sweep_separation(const InteractionQuery& base,
                                       const std::vector<double>& grid,
                                       Execution exec, int max_threads) {
  std::vector<SweepRow> rows(grid.size());
  for_each_index(
      grid.size(),
      [&](std::size_t i) {
        InteractionQuery q = base;
        q.separation = grid[i];
        rows[i] = SweepRow{grid[i], w_total(q)};
      },
      exec, max_threads);
  return rows;
}

std::vector<std::vector<QuadratureResult>> dratio_grid(
    const std::vector<double>& r_grid, const std::vector<double>& couplings,
    const QuadratureConfig& cfg, Execution exec, int max_threads) {
  std::vector<std::vector<QuadratureResult>> out(
      r_grid.size(), std::vector<QuadratureResult>(couplings.size()));
  const std::size_t total = r_grid.size() * couplings.size();
  for_each_index(
      total,
      [&](std::size_t idx) {
        const std::size_t i = idx / couplings.size();
        const std::size_t j = idx % couplings.size();
        out[i][j] = d_ratio(r_grid[i], couplings[j], cfg);
      },
      exec, max_threads);
  return out;
}

}  // namespace vdw
