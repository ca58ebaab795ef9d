#include <doctest.h>

#include <cmath>

#include "bibnet/error.hpp"
#include "bibnet/graph_stats.hpp"
#include "generators.hpp"

using namespace bibnet;

TEST_CASE("hurwitz zeta") {
  CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-13));
  CHECK(hurwitz_zeta(4.0, 1.0) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-13));
  CHECK(hurwitz_zeta(2.0, 2.0) == doctest::Approx(M_PI * M_PI / 6 - 1).epsilon(1e-13));
  // zeta(3) (Apery's constant)
  CHECK(hurwitz_zeta(3.0, 1.0) == doctest::Approx(1.2020569031595942).epsilon(1e-13));
  // Direct summation for a large offset.
  double direct = 0;
  for (int k = 0; k < 2'000'000; ++k) direct += std::pow(50.0 + k, -3.5);
  CHECK(hurwitz_zeta(3.5, 50.0) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("power-law recovery for a few seeds") {
  gen::DiscretePowerLaw law(2.5, 1);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto sample = law.sample(20000, seed);
    auto fit = fit_power_law(sample);
    CHECK(std::abs(fit.gamma - 2.5) < 0.1);
    CHECK(fit.n_samples == 20000);
    CHECK(fit.n_tail <= fit.n_samples);
    CHECK(fit.ks_statistic >= 0);
    CHECK(fit.ks_statistic < 0.05);
  }
}

TEST_CASE("fixed tail cutoff reproduces the closed-form estimate") {
  gen::DiscretePowerLaw law(3.0, 5);
  auto sample = law.sample(30000, 8);
  auto fit = fit_power_law(sample);
  CHECK(fit.xmin >= 5);
  CHECK(std::abs(fit.gamma - 3.0) < 0.15);
}

TEST_CASE("duplicating the sample leaves the fit unchanged") {
  gen::DiscretePowerLaw law(2.2, 1);
  auto s = law.sample(5000, 77);
  auto twice = s;
  twice.insert(twice.end(), s.begin(), s.end());
  auto a = fit_power_law(s), b = fit_power_law(twice);
  CHECK(a.gamma == b.gamma);
  CHECK(a.xmin == b.xmin);
  CHECK(b.n_tail == 2 * a.n_tail);
}

TEST_CASE("geometric samples give large KS distance at xmin = 1") {
  auto s = gen::geometric(5000, 0.3, 4);
  auto fit = fit_power_law(s);
  auto pl = fit_power_law(gen::DiscretePowerLaw(2.5, 1).sample(5000, 4));
  CHECK(fit.ks_statistic > pl.ks_statistic);
}

TEST_CASE("degenerate inputs") {
  std::vector<std::uint64_t> few(10, 3);
  CHECK_THROWS_AS(fit_power_law(few), DegenerateError);
  std::vector<std::uint64_t> constant(500, 4);
  CHECK_THROWS_AS(fit_power_law(constant), DegenerateError);
  std::vector<std::uint64_t> zero(500, 1);
  zero[7] = 0;
  CHECK_THROWS_AS(fit_power_law(zero), DegenerateError);
}
