// Benchmark: OpenMP-parallel grid sweeps against the serial reference.
// The two paths must produce bit-identical rows; reports wall times and
// speedup for a separation sweep and a dratio grid.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "vdw/energies.hpp"
#include "vdw/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

vdw::InteractionQuery workload_query() {
  vdw::InteractionQuery q;
  q.particle_a.alpha_e = vdw::PolarizabilityModel::two_level(1.0, 1.0);
  q.particle_a.alpha_m = vdw::PolarizabilityModel::two_level(1.4, 0.3);
  q.particle_b = q.particle_a;
  q.medium = vdw::ResponseModel({{1.2, 1.0, 0.1}}, {{0.8, 1.6, 0.05}});
  q.method = vdw::Method::both;
  q.quadrature.rel_tol = 1e-12;
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  int points = 200;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--points") == 0 && i + 1 < argc)
      points = std::atoi(argv[++i]);
  }
  if (points < 2) points = 2;

#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel path runs serially\n");
#endif

  const auto grid = vdw::GridSpec{0.3, 20.0, points, vdw::Spacing::logarithmic}.make();
  const vdw::InteractionQuery q = workload_query();

  double t0 = now_seconds();
  const auto serial = vdw::sweep_separation(q, grid, vdw::Execution::serial);
  const double t_serial = now_seconds() - t0;

  t0 = now_seconds();
  const auto parallel = vdw::sweep_separation(q, grid, vdw::Execution::parallel,
                                              vdw::thread_cap_from_env());
  const double t_parallel = now_seconds() - t0;

  long long mismatched = 0;
  for (std::size_t i = 0; i < serial.size(); ++i) {
    const auto& a = serial[i].breakdown;
    const auto& b = parallel[i].breakdown;
    if (a.w_ee != b.w_ee || a.w_mm != b.w_mm || a.w_em != b.w_em ||
        a.w_total != b.w_total)
      ++mismatched;
  }

  std::printf("sweep_separation  points=%d  serial=%.3fs  parallel=%.3fs  "
              "speedup=%.2fx  mismatched_rows=%lld\n",
              points, t_serial, t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0, mismatched);

  const auto rgrid = vdw::GridSpec{0.01, 10.0, points, vdw::Spacing::logarithmic}.make();
  t0 = now_seconds();
  const auto dserial = vdw::dratio_grid(rgrid, {0.0, 3.0}, {}, vdw::Execution::serial);
  const double td_serial = now_seconds() - t0;

  t0 = now_seconds();
  const auto dparallel = vdw::dratio_grid(rgrid, {0.0, 3.0}, {},
                                          vdw::Execution::parallel,
                                          vdw::thread_cap_from_env());
  const double td_parallel = now_seconds() - t0;

  long long dmismatch = 0;
  for (std::size_t i = 0; i < dserial.size(); ++i)
    for (std::size_t j = 0; j < dserial[i].size(); ++j)
      if (dserial[i][j].value != dparallel[i][j].value) ++dmismatch;

  std::printf("dratio_grid       points=%d  serial=%.3fs  parallel=%.3fs  "
              "speedup=%.2fx  mismatched_cells=%lld\n",
              points, td_serial, td_parallel,
              td_parallel > 0 ? td_serial / td_parallel : 0.0, dmismatch);

  return (mismatched == 0 && dmismatch == 0) ? 0 : 1;
}
