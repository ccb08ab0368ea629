#include <doctest.h>

#include <cmath>
#include <limits>
#include <algorithm>
#include <numbers>
#include <random>

#include "oscinfo/errors.hpp"
#include "oscinfo/grid.hpp"
#include "oscinfo/spatial_info.hpp"

using namespace oscinfo;
using std::numbers::pi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double erf_series(double x) {
  double term = x;
  double sum = x;
  for (int n = 1; n < 60; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
  }
  return 2.0 / std::sqrt(pi) * sum;
}

double c_info() { return 1.0 + std::log(std::sqrt(pi)); }

}  // namespace

TEST_CASE("partition probability") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  CHECK(partition_probability(c, 0.0, -kInf, kInf) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(partition_probability(c, 0.0, 0.0, 2.0) == doctest::Approx(erf_series(1.0)).epsilon(1e-13));
  CHECK(erf_series(1.0) == doctest::Approx(0.842701).epsilon(1e-6));
  CHECK(partition_probability(c, 0.0, 0.3, 0.3) == 0.0);
  CHECK_THROWS_AS(partition_probability(c, 0.0, 1.0, 0.0), InputError);
  const auto far = OscillatorConfig::with_alpha(4.0);
  // deep tail on both sides, no cancellation
  CHECK(partition_probability(far, 0.0, 3.0, kInf) == doctest::Approx(0.5 * std::erfc(8.0)).epsilon(1e-12));
}

TEST_CASE("partition probabilities add up") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = OscillatorConfig::with_alpha(0.5 + trial * 0.3);
    const double t = 0.1 * trial;
    std::vector<double> cuts{-5.0, 5.0};
    for (int k = 0; k < 20; ++k) cuts.push_back(u(rng));
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) sum += partition_probability(c, t, cuts[k], cuts[k + 1]);
    CHECK(std::abs(sum - partition_probability(c, t, -5.0, 5.0)) < 1e-12);
  }
}

TEST_CASE("discrete entropy") {
  const auto c = OscillatorConfig::with_alpha(1.7);
  const double t = 0.8;
  const double centre = std::cos(t);
  CHECK(discrete_entropy(c, t, Partition1D({-kInf, centre, kInf})) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(std::abs(discrete_entropy(c, t, Partition1D({-kInf, kInf}))) < 1e-15);
  CHECK_THROWS_AS(Partition1D({1.0, 1.0}), InputError);
  CHECK_THROWS_AS(Partition1D({1.0}), InputError);
}

TEST_CASE("discrete entropy approaches differential entropy under refinement") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const double target = 0.5 * std::log(pi * std::exp(1.0));
  double previous = 1.0;
  for (std::size_t cells : {64u, 512u, 4096u}) {
    const double width = 12.0 / static_cast<double>(cells);
    const double h = discrete_entropy(c, 0.0, Partition1D::uniform(-5.0, 7.0, cells)) + std::log(width);
    const double err = std::abs(h - target);
    if (cells >= 512) CHECK(err < 1e-3);
    CHECK(err <= previous);
    previous = err;
  }
}

TEST_CASE("information density values") {
  const auto one = OscillatorConfig::with_alpha(1.0);
  const double peak1 = c_info() / (2.0 * std::sqrt(pi));
  CHECK(info_constant() == doctest::Approx(c_info()).epsilon(1e-15));
  CHECK(info_density(one, {1.0, 0.0}) == doctest::Approx(peak1).epsilon(1e-14));
  CHECK(peak1 == doctest::Approx(0.443556).epsilon(1e-6));
  CHECK(info_density(OscillatorConfig::with_alpha(10.0), {1.0, 0.0}) == doctest::Approx(10 * peak1).epsilon(1e-14));
  CHECK(info_density(one, {40.0, 0.0}) == 0.0);
  CHECK(info_density_s6_variant(one, {1.0, 0.0}) == doctest::Approx(0.887113).epsilon(1e-6));
  const auto two = OscillatorConfig::with_alpha(2.0);
  CHECK(info_density_s6_variant(two, {2.0, 0.0}) == doctest::Approx(2.0 * info_density(two, {2.0, 0.0})).epsilon(1e-15));
}

TEST_CASE("information density is symmetric about the trajectory") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> a(0.5, 20.0);
  std::uniform_real_distribution<double> y(-5.0, 5.0);
  int bad = 0;
  for (int k = 0; k < 1000000; ++k) {
    const double alpha = a(rng);
    const double yy = y(rng) / alpha;
    if (info_density_at_displacement(alpha, yy) != info_density_at_displacement(alpha, -yy)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("total information is conserved") {
  const double oracle = c_info() / 2.0 + 0.25;
  CHECK(oracle == doctest::Approx(1.036182).epsilon(1e-6));
  CHECK(total_information(OscillatorConfig::with_alpha(1.0)) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(total_information(OscillatorConfig::with_alpha(10.0)) == doctest::Approx(oracle).epsilon(1e-12));
  const auto c = OscillatorConfig::with_alpha(3.0);
  CHECK(std::abs(total_information(c, 0.0) - total_information(c, pi / 3)) < 1e-10);
}

TEST_CASE("Riemann sum of the unit-prefactor variant gives twice the total") {
  const auto c = OscillatorConfig::with_alpha(2.0);
  const double t = 0.6;
  const double lo = std::cos(t) - 10.0 / 2.0;
  const double hi = std::cos(t) + 10.0 / 2.0;
  const int n = 4000;
  const double h = (hi - lo) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += info_density_s6_variant(c, {lo + (i + 0.5) * h, t}) * h;
  CHECK(std::abs(sum - 2.0 * total_information(c, t)) < 1e-6);
}

TEST_CASE("differential entropy") {
  CHECK(differential_entropy(OscillatorConfig::with_alpha(1.0)) == doctest::Approx(1.072365).epsilon(1e-6));
  // zero crossing sits at sqrt(pi e); alpha = e sqrt(pi) gives -1/2
  CHECK(differential_entropy(OscillatorConfig::with_alpha(std::exp(1.0) * std::sqrt(pi))) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(differential_entropy(OscillatorConfig::with_alpha(std::sqrt(pi * std::exp(1.0))))) < 1e-15);
  CHECK(differential_entropy(OscillatorConfig::with_alpha(10.0)) == doctest::Approx(-1.230220).epsilon(1e-6));
}

TEST_CASE("density curve") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const InfoDensityCurve curve = density_curve(c, 0.0, Grid1D(-3.0, 5.0, 801));
  const auto top = std::max_element(curve.density.begin(), curve.density.end());
  const auto i = static_cast<std::size_t>(top - curve.density.begin());
  CHECK(std::abs(curve.y[i]) < 1e-12);
  CHECK(*top == doctest::Approx(0.443556).epsilon(1e-6));
  const InfoDensityCurve sharp = density_curve(OscillatorConfig::with_alpha(10.0), 1.0, Grid1D(-2.0, 2.0, 401));
  for (double d : sharp.density) CHECK(d >= 0.0);
}

TEST_CASE("FWHM against bisection oracle") {
  // solve e^{-u^2}(c + u^2) = c/2 by plain bisection
  const double c = c_info();
  double lo = 0.0;
  double hi = 4.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (std::exp(-mid * mid) * (c + mid * mid) > c / 2 ? lo : hi) = mid;
  }
  for (double alpha : {1.0, 3.0, 7.5, 20.0}) {
    CHECK(info_density_fwhm(OscillatorConfig::with_alpha(alpha)) ==
          doctest::Approx(2.0 * lo / alpha).epsilon(1e-10));
  }
}
