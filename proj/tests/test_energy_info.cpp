#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oscinfo/energy_info.hpp"
#include "oscinfo/errors.hpp"
#include "oscinfo/spatial_info.hpp"

using namespace oscinfo;
using std::numbers::pi;

TEST_CASE("classical energy") {
  CHECK(classical_energy(OscillatorConfig(1, 1, 1, 1)) == doctest::Approx(0.5));
  const OscillatorConfig c(1, 1, 2, 1);
  CHECK(classical_energy(c) == doctest::Approx(2.0));
  CHECK(classical_energy(c) == doctest::Approx(c.quantum_energy() * c.alpha() * c.alpha() / 2));
  CHECK(classical_energy(OscillatorConfig(1.5, 0.7, 2.6, 1)) ==
        doctest::Approx(4.0 * classical_energy(OscillatorConfig(1.5, 0.7, 1.3, 1))).epsilon(1e-14));
}

TEST_CASE("energy density on the trajectory") {
  const OscillatorConfig c(1.2, 0.9, 1.4, 1.1);
  for (double t : {0.0, 0.5, 2.0}) {
    const double xt = classical_trajectory(c, t);
    CHECK(energy_density(c, {xt, t}) ==
          doctest::Approx(c.alpha() / std::sqrt(pi) * classical_energy(c)).epsilon(1e-13));
  }
}

TEST_CASE("energy density equals the Lagrangian form with hand-written gradients") {
  const auto c = OscillatorConfig::with_alpha(3.0);
  const double t = 0.7;
  const double a2 = 9.0;
  for (int i = 0; i <= 100; ++i) {
    const double xt = -2.0 + 4.0 * i / 100.0;
    const double y = xt - std::cos(t);
    const double rho = std::sqrt(a2 / pi) * std::exp(-a2 * y * y);
    // |d psi/d xt|^2 = rho * alpha^4 (y^2 + sin^2)
    const double grad2 = rho * a2 * a2 * (y * y + std::sin(t) * std::sin(t));
    const double t00 = -(grad2 / (2.0 * 9.0) + 0.5 * 9.0 * xt * xt * rho);
    const double e = energy_density(c, {xt, t});
    CHECK(std::abs(std::abs(t00) - e) <= 1e-10 * std::max(1.0, e));
    CHECK(lagrangian_energy_density(c, {xt, t}) == doctest::Approx(t00).epsilon(1e-12));
  }
}

TEST_CASE("energy per information") {
  const auto one = OscillatorConfig::with_alpha(1.0);
  const double c = 1.0 + std::log(std::sqrt(pi));
  CHECK(energy_per_info(one, {1.0, 0.0}) == doctest::Approx(1.0 / c).epsilon(1e-14));
  CHECK(energy_per_info(one, {1.0, 0.0}) == doctest::Approx(0.635984).epsilon(1e-6));
  CHECK(energy_per_info(OscillatorConfig::with_alpha(20.0), {1.0, 0.0}) == doctest::Approx(254.4).epsilon(1e-3));
  CHECK(energy_per_info(OscillatorConfig::with_alpha(0.5), {1.0, 0.0}) == doctest::Approx(0.159).epsilon(2e-3));
  // in energy units this is E_cl / (c/2)
  const OscillatorConfig phys(2.0, 3.0, 0.5, 1.0);
  CHECK(energy_per_info(phys, {1.0, 0.0}) * phys.quantum_energy() ==
        doctest::Approx(classical_energy(phys) / (c / 2)).epsilon(1e-13));
}

TEST_CASE("large-xt limit is two quanta with 1/xt convergence") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  CHECK(energy_per_info(c, {1e3, 0.0}) == doctest::Approx(2.0).epsilon(1e-2));
  const double e2 = (energy_per_info(c, {1e2, 0.0}) - 2.0) * 1e2;
  const double e4 = (energy_per_info(c, {1e4, 0.0}) - 2.0) * 1e4;
  CHECK(e2 == doctest::Approx(e4).epsilon(0.05));
  CHECK(std::abs(e4) > 0.1);
}

TEST_CASE("ratio identity and positivity at random points") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 10000; ++k) {
    const double alpha = 0.5 + 19.5 * u(rng);
    const auto c = OscillatorConfig::with_alpha(alpha);
    const double t = 2 * pi * u(rng);
    const Coordinate p{std::cos(t) + (12 * u(rng) - 6) / alpha, t};
    const double r = energy_per_info(c, p);
    const double d = info_density(c, p);
    if (d > 1e-300) CHECK(std::abs(energy_density(c, p) / (c.quantum_energy() * d) / r - 1.0) < 1e-10);
    // 2 xt y + 1 = xt^2 + y^2 + sin^2 >= 1/2, so the ratio never changes sign
    CHECK(r > 0.0);
  }
}

TEST_CASE("energy sample and surface") {
  const auto c = OscillatorConfig::with_alpha(20.0);
  const EnergyInfoSample s = energy_info_sample(c, {0.9, 0.3});
  CHECK(s.ratio == energy_per_info(c, {0.9, 0.3}));
  CHECK(s.energy_density == energy_density(c, {0.9, 0.3}));
  const Grid1D grid(-3.0, 3.0, 61);
  const EnergyInfoSurface a = energy_info_surface(c, grid, {0.4, 1.1});
  const EnergyInfoSurface b = energy_info_surface(c, grid, {0.4 + 2 * pi, 1.1 + 2 * pi});
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 61; ++i) CHECK(a.at(k, i) == doctest::Approx(b.at(k, i)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(energy_info_surface(c, grid, {}), InputError);
}
