#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "vdw/materials.hpp"

using namespace vdw;

namespace {

ResponseModel random_model(std::mt19937& rng) {
  std::uniform_real_distribution<double> wp(0.1, 3.0), w0(0.2, 5.0), g(0.0, 1.0);
  std::vector<LorentzTerm> eps, mu;
  const int ne = 1 + int(rng() % 3);
  const int nm = int(rng() % 2);
  for (int i = 0; i < ne; ++i) eps.push_back({wp(rng), w0(rng), g(rng)});
  for (int i = 0; i < nm; ++i) mu.push_back({wp(rng), w0(rng), g(rng)});
  return ResponseModel(eps, mu);
}

// eps at the analytic substitution w -> iu, done in complex arithmetic.
std::complex<double> eps_by_substitution(const ResponseModel& m, double u) {
  const std::complex<double> iu(0.0, u);
  std::complex<double> e = 1.0;
  for (const auto& t : m.electric())
    e += t.plasma_strength * t.plasma_strength /
         (t.resonance * t.resonance - iu * iu -
          std::complex<double>(0.0, 1.0) * t.damping * iu);
  return e;
}

}  // namespace

TEST_CASE("two-level dielectric permittivity on the imaginary axis") {
  const ResponseModel vac = ResponseModel::two_level_dielectric(0.0);
  CHECK(vac.eps_iu(0.0) == 1.0);
  CHECK(vac.eps_iu(0.37) == 1.0);

  const ResponseModel c3 = ResponseModel::two_level_dielectric(3.0);
  CHECK(c3.eps_iu(0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(c3.eps_iu(1.0) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("refractive index on the imaginary axis") {
  CHECK(ResponseModel::vacuum().n_iu(0.9) == 1.0);
  CHECK(ResponseModel::two_level_dielectric(3.0).n_iu(0.0) ==
        doctest::Approx(2.0).epsilon(1e-15));

  // eps(0) = 2.25, mu(0) = 4 -> n(0) = 3
  const ResponseModel m({{std::sqrt(1.25), 1.0, 0.0}}, {{std::sqrt(3.0), 1.0, 0.0}});
  CHECK(m.n_iu(0.0) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("complex response at real frequency") {
  const auto vac = ResponseModel::vacuum().response_complex(1.3);
  CHECK(vac.eps == std::complex<double>(1.0, 0.0));
  CHECK(vac.mu == std::complex<double>(1.0, 0.0));
  CHECK(vac.n == std::complex<double>(1.0, 0.0));

  const ResponseModel lossless({{1.0, 2.0, 0.0}}, {});
  const auto r1 = lossless.response_complex(1.0);
  CHECK(r1.eps.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(r1.eps.imag() == 0.0);

  const ResponseModel damped({{1.0, 1.0, 0.5}}, {});
  const auto r2 = damped.response_complex(1.0);
  const std::complex<double> expected =
      1.0 + 1.0 / std::complex<double>(0.0, -0.5);
  CHECK(std::abs(r2.eps - expected) < 1e-15);
  CHECK(r2.eps.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.eps.imag() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("absorbing response keeps the passive signs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const ResponseModel m = random_model(rng);
    std::uniform_real_distribution<double> w(0.05, 6.0);
    const auto r = m.response_complex(w(rng));
    CHECK(r.eps.imag() >= 0.0);
    CHECK(r.mu.imag() >= 0.0);
    CHECK(r.kappa.imag() <= 0.0);
    CHECK(r.n.imag() >= 0.0);
  }
}

TEST_CASE("group index") {
  CHECK(ResponseModel::vacuum().group_index(0.5) == doctest::Approx(1.0));

  // matches a central finite difference of n(w) for a lossless model
  const ResponseModel m({{0.8, 2.0, 0.0}}, {{0.4, 3.0, 0.0}});
  const double w = 0.7, h = 1e-6 * w;
  auto n_of = [&](double x) {
    return std::sqrt(m.eps_lossless(x) * m.mu_lossless(x));
  };
  const double fd = n_of(w) + w * (n_of(w + h) - n_of(w - h)) / (2.0 * h);
  CHECK(m.group_index(w) == doctest::Approx(fd).epsilon(1e-6));

  // w -> 0: derivative term vanishes by evenness
  const double tiny = 1e-7;
  CHECK(m.group_index(tiny) ==
        doctest::Approx(std::sqrt(m.eps_lossless(tiny) * m.mu_lossless(tiny)))
            .epsilon(1e-10));

  // lossless pole
  CHECK_THROWS_AS(ResponseModel({{1.0, 2.0, 0.0}}, {}).group_index(2.0),
                  SingularityError);
  // evanescent band: eps < 0, mu = 1
  CHECK_THROWS_AS(ResponseModel({{2.0, 1.0, 0.0}}, {}).group_index(1.2),
                  ModelError);
}

TEST_CASE("polarizability models") {
  const auto tl = PolarizabilityModel::two_level(2.0, 0.8);
  CHECK(tl.alpha_iu(0.0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(tl.alpha_iu(2.0) == doctest::Approx(0.4).epsilon(1e-15));

  const auto st = PolarizabilityModel::static_value(1.0);
  CHECK(st.alpha_iu(0.0) == 1.0);
  CHECK(st.alpha_iu(123.0) == 1.0);
  CHECK(st.frequency_scale() == std::numeric_limits<double>::infinity());
  CHECK(tl.frequency_scale() == 2.0);

  CHECK(PolarizabilityModel::zero().is_zero());
  CHECK(!tl.is_zero());

  const auto sum = PolarizabilityModel::term_sum({{1.0, 0.5}, {3.0, 0.25}});
  CHECK(sum.static_limit() == doctest::Approx(0.75));
  CHECK(sum.alpha_iu(1e9) < 1e-15);
}

TEST_CASE("imaginary-axis permittivity invariants") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ResponseModel m = random_model(rng);
    double prev = std::numeric_limits<double>::infinity();
    double max_w0 = 0.0;
    for (const auto& t : m.electric()) max_w0 = std::max(max_w0, t.resonance);
    for (double u = 0.0; u <= 50.0; u += 0.5) {
      const double e = m.eps_iu(u);
      CHECK(e >= 1.0);
      CHECK(e <= prev);
      prev = e;
    }
    CHECK(std::abs(m.eps_iu(1e6 * max_w0) - 1.0) < 1e-9);
  }
}

TEST_CASE("imaginary-axis value equals the analytic substitution w -> iu") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> us(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ResponseModel m = random_model(rng);
    const double u = us(rng);
    const std::complex<double> sub = eps_by_substitution(m, u);
    CHECK(std::abs(sub.imag()) < 1e-12 * std::abs(sub.real()));
    CHECK(m.eps_iu(u) == doctest::Approx(sub.real()).epsilon(1e-12));
  }
}

TEST_CASE("domain errors") {
  const ResponseModel m = ResponseModel::two_level_dielectric(1.0);
  CHECK_THROWS_AS(m.eps_iu(-1.0), DomainError);
  CHECK_THROWS_AS(m.eps_iu(std::nan("")), DomainError);
  CHECK_THROWS_AS(m.response_complex(0.0), DomainError);
  CHECK_THROWS_AS(m.response_complex(-2.0), DomainError);
  CHECK_THROWS_AS(ResponseModel({{-1.0, 1.0, 0.0}}, {}), DomainError);
  CHECK_THROWS_AS(ResponseModel({{1.0, 0.0, 0.0}}, {}), DomainError);
  CHECK_THROWS_AS(ResponseModel({{1.0, 1.0, -0.1}}, {}), DomainError);
  CHECK_THROWS_AS(PolarizabilityModel::static_value(-1.0), DomainError);
  CHECK_THROWS_AS(PolarizabilityModel::two_level(0.0, 1.0), DomainError);
}
