#include <cstdlib>

#include <doctest.h>

#include "vdw/sweep.hpp"

using namespace vdw;

namespace {

InteractionQuery sample_query() {
  InteractionQuery q;
  q.particle_a.alpha_e = PolarizabilityModel::two_level(1.0, 1.0);
  q.particle_a.alpha_m = PolarizabilityModel::static_value(0.2);
  q.particle_b = q.particle_a;
  q.medium = ResponseModel({{1.1, 0.9, 0.1}}, {});
  return q;
}

}  // namespace

TEST_CASE("grid construction") {
  const auto lin = GridSpec{1.0, 3.0, 5, Spacing::linear}.make();
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 1.0);
  CHECK(lin.back() == 3.0);
  CHECK(lin[2] == doctest::Approx(2.0));

  const auto log = GridSpec{0.01, 100.0, 5, Spacing::logarithmic}.make();
  REQUIRE(log.size() == 5);
  CHECK(log.front() == 0.01);
  CHECK(log.back() == 100.0);
  CHECK(log[2] == doctest::Approx(1.0));
  for (std::size_t i = 1; i < log.size(); ++i) CHECK(log[i] > log[i - 1]);

  CHECK_THROWS_AS((GridSpec{1.0, 3.0, 1, Spacing::linear}.make()), DomainError);
  CHECK_THROWS_AS((GridSpec{3.0, 1.0, 4, Spacing::linear}.make()), DomainError);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 4, Spacing::logarithmic}.make()), DomainError);
}

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
  const auto grid = GridSpec{0.5, 8.0, 12, Spacing::logarithmic}.make();
  const InteractionQuery q = sample_query();

  const auto serial = sweep_separation(q, grid, Execution::serial);
  const auto parallel = sweep_separation(q, grid, Execution::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].separation == grid[i]);
    CHECK(serial[i].breakdown.w_ee == parallel[i].breakdown.w_ee);
    CHECK(serial[i].breakdown.w_mm == parallel[i].breakdown.w_mm);
    CHECK(serial[i].breakdown.w_em == parallel[i].breakdown.w_em);
    CHECK(serial[i].breakdown.w_total == parallel[i].breakdown.w_total);
  }
}

TEST_CASE("parallel dratio grid matches the serial reference") {
  const auto rs = GridSpec{0.05, 5.0, 7, Spacing::logarithmic}.make();
  const std::vector<double> cs = {0.0, 3.0};
  const auto serial = dratio_grid(rs, cs, {}, Execution::serial);
  const auto parallel = dratio_grid(rs, cs, {}, Execution::parallel);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      CHECK(serial[i][j].value == parallel[i][j].value);
      CHECK(serial[i][j].error_estimate == parallel[i][j].error_estimate);
    }
}

TEST_CASE("thread cap env parsing") {
  setenv("VDW_THREADS", "3", 1);
  CHECK(thread_cap_from_env() == 3);
  setenv("VDW_THREADS", "0", 1);
  CHECK(thread_cap_from_env() == 0);
  setenv("VDW_THREADS", "abc", 1);
  CHECK(thread_cap_from_env() == 0);
  unsetenv("VDW_THREADS");
  CHECK(thread_cap_from_env() == 0);
}

TEST_CASE("exceptions propagate out of the parallel loop") {
  auto boom = [](std::size_t i) {
    if (i == 3) throw DomainError("boom");
  };
  CHECK_THROWS_AS(for_each_index(8, boom, Execution::parallel), DomainError);
  CHECK_THROWS_AS(for_each_index(8, boom, Execution::serial), DomainError);
}
