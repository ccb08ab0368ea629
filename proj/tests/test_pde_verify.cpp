#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oscinfo/errors.hpp"
#include "oscinfo/grid.hpp"
#include "oscinfo/pde_verify.hpp"

using namespace oscinfo;
using std::numbers::pi;

namespace {

FieldFunction coherent(const OscillatorConfig& c) {
  return [c](double xt, double t) { return coherent_state(c, {xt, t}); };
}

FieldFunction plane_wave(double k, double w) {
  return [k, w](double xt, double t) { return std::exp(cplx(0.0, k * xt - w * t)); };
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

ResidualReport coherent_schrodinger(const OscillatorConfig& c, double h, double dt) {
  const auto n = static_cast<std::size_t>(std::llround(20.0 / h)) + 1;
  const Grid1D g(-10.0, 10.0, n, dt);
  return schrodinger_residual(sample_field_centered(g, 0.7, coherent(c)), sample_harmonic_potential(c, g), c);
}

}  // namespace

TEST_CASE("transform constant and cancellation viscosity") {
  const OscillatorConfig c(2.0, 1.0, 1.0, 3.0);
  CHECK(transform_constant(c) == cplx(0.0, -3.0));
  CHECK(cancellation_viscosity(c).real() == 0.0);
  CHECK(cancellation_viscosity(c).imag() == doctest::Approx(0.75));
}

TEST_CASE("action of a constant field vanishes") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const Grid1D g(-1.0, 1.0, 21, 0.01);
  const SampledAction s = hj_action_from_wavefunction(
      sample_field_centered(g, 0.0, [](double, double) { return cplx(1.0, 0.0); }), c);
  for (const auto& slice : s.slices) CHECK(max_abs(slice) == 0.0);
  CHECK(s.flagged() == 0);
}

TEST_CASE("action of a plane wave is linear after unwrapping") {
  const OscillatorConfig c(1.0, 1.0, 2.0, 1.0);
  const double k = 7.0;
  const Grid1D g(-3.0, 3.0, 601, 0.01);
  const SampledAction s = hj_action_from_wavefunction(sample_field_centered(g, 0.0, plane_wave(k, 0.0)), c);
  const auto& mid = s.slices[1];
  for (std::size_t i = 1; i + 1 < mid.size(); ++i) {
    CHECK(std::abs(mid[i + 1] - 2.0 * mid[i] + mid[i - 1]) < 1e-11);
    CHECK(std::abs((mid[i + 1] - mid[i]).real() - k * g.spacing()) < 1e-11);
    CHECK(std::abs(mid[i].imag()) < 1e-13);
  }
}

TEST_CASE("imaginary action is -hbar/2 ln rho for the coherent state") {
  const OscillatorConfig c(1.0, 1.0, 1.0, 1.0);
  const Grid1D g(-4.0, 6.0, 1001, 1e-3);
  const SampledAction s = hj_action_from_wavefunction(sample_field_centered(g, 0.0, coherent(c)), c);
  for (std::size_t i = 0; i < g.n_points(); i += 10) {
    const double xt = g.node(i);
    const double rho = std::exp(-(xt - 1.0) * (xt - 1.0)) / std::sqrt(pi);
    CHECK(std::abs(s.slices[1][i].imag() + 0.5 * std::log(rho)) < 1e-10);
  }
}

TEST_CASE("action floor flags vanishing nodes") {
  const auto c = OscillatorConfig::with_alpha(10.0);
  const Grid1D g(-10.0, 10.0, 2001, 1e-4);
  const SampledAction s = hj_action_from_wavefunction(sample_field_centered(g, 0.0, coherent(c)), c);
  CHECK(s.flagged() > 0);
  CHECK(s.flagged() < g.n_points());
  CHECK_THROWS_AS(hj_action_from_wavefunction(sample_field_centered(g, 0.0, [](double, double) { return cplx{}; }), c),
                  InputError);
}

TEST_CASE("under-resolved fields are rejected") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const Grid1D g(-1.0, 1.0, 11, 1e-3);
  // k h = 2 > pi/2
  CHECK_THROWS_AS(hj_action_from_wavefunction(sample_field_centered(g, 0.0, plane_wave(10.0, 0.0)), c), InputError);
}

TEST_CASE("Schrodinger residual of the coherent state converges at second order") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const ResidualReport coarse = coherent_schrodinger(c, 0.01, 1e-4);
  const ResidualReport fine = coherent_schrodinger(c, 0.005, 5e-5);
  CHECK(coarse.max_abs / fine.max_abs == doctest::Approx(4.0).epsilon(0.05));
  const auto r = with_convergence_order(coarse, fine);
  REQUIRE(r.order_estimate);
  CHECK(*r.order_estimate == doctest::Approx(2.0).epsilon(0.05));
  CHECK(fine.l2 <= fine.max_abs);
  CHECK(!coarse.order_estimate);
}

TEST_CASE("stationary ground state") {
  const OscillatorConfig c(1.0, 1.0, 1.0, 1.0);
  auto ground = [](double xt, double t) {
    return std::pow(pi, -0.25) * std::exp(-0.5 * xt * xt) * std::exp(cplx(0.0, -0.5 * t));
  };
  double prev = 1e300;
  for (double h : {0.02, 0.01, 0.005}) {
    const Grid1D g(-8.0, 8.0, static_cast<std::size_t>(std::llround(16.0 / h)) + 1, h);
    const double r = schrodinger_residual(sample_field_centered(g, 0.3, ground), sample_harmonic_potential(c, g), c).max_abs;
    CHECK(r < prev / 3.5);
    prev = r;
  }
}

TEST_CASE("random smooth field does not solve the Schrodinger equation") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const BandLimitedField f = BandLimitedField::random(42);
  const Grid1D g(-1.0, 1.0, 512, 2.0 / 511.0);
  const auto r = schrodinger_residual(sample_field_centered(g, 0.3, [&f](double x, double t) { return f(x, t); }),
                                      sample_harmonic_potential(c, g), c);
  CHECK(r.max_abs > 0.1);
}

TEST_CASE("residuals need three slices and a matching potential") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const Grid1D g(-1.0, 1.0, 11, 0.01);
  const auto one = sample_field(g, 0.0, 1, coherent(c));
  CHECK_THROWS_AS(schrodinger_residual(one, sample_harmonic_potential(c, g), c), InputError);
  const auto three = sample_field_centered(g, 0.0, coherent(c));
  CHECK_THROWS_AS(schrodinger_residual(three, std::vector<double>(5, 0.0), c), InputError);
}

TEST_CASE("free classical action solves the inviscid equation exactly") {
  const OscillatorConfig c(1.5, 1.0, 1.0, 1.0);
  const double p = 0.8;
  const Grid1D g(-2.0, 2.0, 41, 0.01);
  SampledAction s{g, 0.29, {}, std::vector<bool>(41, true)};
  for (int k = 0; k < 3; ++k) {
    std::vector<cplx> slice;
    for (double x : g.nodes()) slice.emplace_back(p * x - p * p / (2 * 1.5) * (0.29 + 0.01 * k), 0.0);
    s.slices.push_back(slice);
  }
  const auto r = hj_residual(s, std::vector<double>(41, 0.0), cplx{}, c);
  CHECK(r.max_abs < 1e-12);
  CHECK(r.evaluated_nodes == 39);
}

TEST_CASE("quantum term matters in the Hamilton-Jacobi residual") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  auto run = [&](double h, cplx nu) {
    const Grid1D g(-4.0, 6.0, static_cast<std::size_t>(std::llround(10.0 / h)) + 1, h / 100.0);
    const auto field = sample_field_centered(g, 0.7, coherent(c));
    return hj_residual(hj_action_from_wavefunction(field, c), sample_harmonic_potential(c, g), nu, c);
  };
  CHECK(run(0.01, cplx{}).max_abs > 0.1);
  const auto coarse = run(0.01, cancellation_viscosity(c));
  const auto fine = run(0.005, cancellation_viscosity(c));
  CHECK(fine.max_abs < 1e-3);
  CHECK(*with_convergence_order(coarse, fine).order_estimate == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("plane-wave identity residual equals the stencil error") {
  const OscillatorConfig c(1.3, 1.0, 0.9, 0.7);
  const double k = 5.0;
  const double w = 2.0;
  const double h = 0.01;
  const double dt = 1e-3;
  const Grid1D g(-1.0, 1.0, 201, dt);
  const auto field = sample_field_centered(g, 0.2, plane_wave(k, w));
  const auto r = transform_identity_residual(field, sample_harmonic_potential(c, g), c);
  const double hbar = c.hbar();
  const double closed = std::abs(hbar * std::sin(w * dt) / dt - hbar * w +
                                 hbar * hbar / (2 * c.mass() * 0.81) * ((2 * std::cos(k * h) - 2) / (h * h) + k * k));
  CHECK(r.identity.max_abs == doctest::Approx(closed).epsilon(1e-6));
  CHECK(r.identity.max_abs < 1e-2);
}

TEST_CASE("coherent-state identity residual is small and second order") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  auto run = [&](std::size_t n) {
    const Grid1D g(-5.0, 7.0, n, 12.0 / static_cast<double>(n - 1) / 10.0);
    return transform_identity_residual(sample_field_centered(g, 0.4, coherent(c)), sample_harmonic_potential(c, g), c);
  };
  const auto coarse = run(1201);
  const auto fine = run(2401);
  CHECK(fine.identity.max_abs < 1e-3);
  CHECK(*with_convergence_order(coarse.identity, fine.identity).order_estimate ==
        doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("identity residual separates from the individual residuals on random fields") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  for (std::uint64_t seed : {1000u, 1007u, 1019u}) {
    const BandLimitedField f = BandLimitedField::random(seed);
    const Grid1D g(-1.0, 1.0, 1023, 2.0 / 1022.0);
    const auto r = transform_identity_residual(
        sample_field_centered(g, 0.3, [&f](double x, double t) { return f(x, t); }), sample_harmonic_potential(c, g), c);
    CHECK(std::min(r.max_hj_scaled, r.max_schrodinger) / r.identity.max_abs > 100.0);
    const auto off = transform_identity_residual(
        sample_field_centered(g, 0.3, [&f](double x, double t) { return f(x, t); }), sample_harmonic_potential(c, g), c,
        cancellation_viscosity(c) * 1.05);
    CHECK(off.identity.max_abs > 10.0 * r.identity.max_abs);
  }
}

TEST_CASE("band-limited fields stay away from zero") {
  const BandLimitedField f = BandLimitedField::random(9);
  double sum = 0.0;
  for (const auto& m : f.modes()) sum += std::abs(m.amplitude);
  CHECK(f.offset() >= 2.0 * sum);
  for (int i = 0; i <= 100; ++i) CHECK(std::abs(f(-1.0 + 0.02 * i, 0.37)) >= f.offset() - sum);
  CHECK_THROWS_AS(BandLimitedField(0.1, {{cplx(1.0, 0.0), 1.0, 1.0}}), InputError);
  CHECK_THROWS_AS(BandLimitedField::random(1, 9), InputError);
}

namespace {

std::vector<SampledComplexField> random_fields(std::size_t n_points) {
  std::vector<SampledComplexField> out;
  for (std::uint64_t k = 0; k < 3; ++k) {
    const BandLimitedField f = BandLimitedField::random(500 + k, 8, 3.0, 2.0);
    out.push_back(sample_field(Grid1D(-1.0, 1.0, n_points), 0.0, 1, [f](double x, double t) { return f(x, t); }));
  }
  return out;
}

}  // namespace

TEST_CASE("viscosity fit recovers i hbar/2m and scales with m and hbar") {
  const auto fields = random_fields(2001);
  const ViscosityEstimate base = viscosity_fit(fields, OscillatorConfig(1.0, 1.0, 1.0, 1.0));
  CHECK(std::abs(base.nu - cplx(0.0, 0.5)) < 1e-6);
  CHECK(base.residual_at_nu >= 0.0);
  const cplx heavy = viscosity_fit(fields, OscillatorConfig(2.0, 1.0, 1.0, 1.0)).nu;
  const cplx big_hbar = viscosity_fit(fields, OscillatorConfig(1.0, 1.0, 1.0, 2.0)).nu;
  CHECK(std::abs(heavy) == doctest::Approx(0.5 * std::abs(base.nu)).epsilon(1e-6));
  CHECK(std::abs(big_hbar) == doctest::Approx(2.0 * std::abs(base.nu)).epsilon(1e-6));
  CHECK(std::abs(base.nu) <= 1.0);
}

TEST_CASE("viscosity fit on coherent states") {
  const OscillatorConfig c(1.0, 1.0, 1.0, 1.0);
  std::vector<SampledComplexField> fields;
  for (double alpha : {1.0, 1.5, 2.0}) {
    const auto ca = OscillatorConfig::with_alpha(alpha);
    fields.push_back(sample_field(Grid1D(-1.0, 3.0, 4001), 0.5, 1, coherent(ca)));
  }
  CHECK(std::abs(viscosity_fit(fields, c).nu - cplx(0.0, 0.5)) < 1e-6);
}

TEST_CASE("degenerate viscosity fits are refused") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const Grid1D g(-1.0, 1.0, 101);
  std::vector<SampledComplexField> flat(3, sample_field(g, 0.0, 1, [](double, double) { return cplx(2.0, 1.0); }));
  CHECK_THROWS_AS(viscosity_fit(flat, c), NumericError);
  auto two = random_fields(101);
  two.pop_back();
  CHECK_THROWS_AS(viscosity_fit(two, c), InputError);
}

TEST_CASE("delta epsilon average") {
  const auto c = OscillatorConfig::with_alpha(2.0);
  auto fd_average = [&](std::size_t n) {
    const Grid1D g(-5.0, 7.0, n, 1e-4);
    return delta_epsilon_average(sample_field_centered(g, 0.9, coherent(c)), sample_harmonic_potential(c, g), c);
  };
  const double coarse = fd_average(6001);
  const double fine = fd_average(12001);
  CHECK(std::abs(fine) < 1e-5);
  CHECK(std::abs(coarse / fine) == doctest::Approx(4.0).epsilon(0.05));

  const OscillatorConfig unit(1.0, 1.0, 1.0, 1.0);
  auto ground = [](double xt, double t) {
    return std::pow(pi, -0.25) * std::exp(-0.5 * xt * xt) * std::exp(cplx(0.0, -0.5 * t));
  };
  const Grid1D gg(-10.0, 10.0, 4001, 1e-4);
  const auto ug = sample_harmonic_potential(unit, gg);
  CHECK(std::abs(delta_epsilon_average(sample_field_centered(gg, 0.0, ground), ug, unit)) < 1e-5);

  // an extra e^{-i Omega t} raises the action rate term by hbar Omega
  const double omega_extra = 0.3;
  const auto shifted = [&](double xt, double t) { return ground(xt, t) * std::exp(cplx(0.0, -omega_extra * t)); };
  CHECK(delta_epsilon_average(sample_field_centered(gg, 0.0, shifted), ug, unit) ==
        doctest::Approx(omega_extra).epsilon(1e-5));

  const auto doubled = [&](double xt, double t) { return 2.0 * ground(xt, t); };
  CHECK_THROWS_AS(delta_epsilon_average(sample_field_centered(gg, 0.0, doubled), ug, unit), InputError);
}

TEST_CASE("on-trajectory energy gap") {
  CHECK(on_trajectory_energy_gap(OscillatorConfig::with_alpha(1.0), 0.0).gap == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(on_trajectory_energy_gap(OscillatorConfig::with_alpha(15.0), 1.3).gap == doctest::Approx(0.5).epsilon(1e-12));
  const OscillatorConfig c(2.0, 3.0, 0.5, 1.0);
  const EnergyGapTerms t = on_trajectory_energy_gap(c, pi / 2 / 3.0);
  CHECK(t.kinetic == doctest::Approx(0.5 * 2.0 * 9.0 * 0.25).epsilon(1e-13));
  CHECK(std::abs(t.potential) < 1e-14);
  CHECK(t.gap == doctest::Approx(0.5 * c.quantum_energy()).epsilon(1e-13));
}

TEST_CASE("massless dual solutions") {
  const auto c = OscillatorConfig::with_alpha(1.0);
  const auto on = massless_dual_residuals(1.0, {0.0, 1.0, 0.0}, c);
  CHECK(on.particle_residual < 1e-15);
  CHECK(on.wave_residual < 1e-15);
  CHECK(on.de_broglie_mismatch == 0.0);
  CHECK(on.action_mismatch < 1e-12);
  CHECK(on.momentum[1] == c.hbar());
  const auto off = massless_dual_residuals(1.0, {2.0, 0.0, 0.0}, c);
  CHECK(off.wave_residual == doctest::Approx(3.0));
  CHECK(off.particle_residual == doctest::Approx(3.0));
}
