#include "oscinfo/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oscinfo/errors.hpp"

namespace oscinfo {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw InputError(std::string("oscillator parameter '") + name +
                     "' must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

OscillatorConfig::OscillatorConfig(double mass, double angular_frequency,
                                   double amplitude, double hbar)
    : mass_(mass), omega_(angular_frequency), amplitude_(amplitude), hbar_(hbar) {
  require_positive(mass, "mass");
  require_positive(angular_frequency, "angular_frequency");
  require_positive(amplitude, "amplitude");
  require_positive(hbar, "hbar");
}

OscillatorConfig OscillatorConfig::with_alpha(double alpha) {
  return OscillatorConfig(1.0, 1.0, alpha, 1.0);
}

double OscillatorConfig::alpha() const noexcept {
  return amplitude_ * std::sqrt(mass_ * omega_ / hbar_);
}

double OscillatorConfig::de_broglie_wavelength() const noexcept {
  return hbar_ / (mass_ * amplitude_ * omega_);
}

double displacement(const OscillatorConfig& config, const Coordinate& coord) {
  return coord.xt - classical_trajectory(config, coord.t);
}

double classical_trajectory(const OscillatorConfig& config, double t) {
  return std::cos(config.angular_frequency() * t);
}

double harmonic_potential(const OscillatorConfig& config, double xt) {
  const double w = config.angular_frequency();
  const double a = config.amplitude();
  return 0.5 * config.mass() * w * w * a * a * xt * xt;
}

cplx coherent_state_log(const OscillatorConfig& config, const Coordinate& coord) {
  const double alpha = config.alpha();
  const double a2 = alpha * alpha;
  const double wt = config.angular_frequency() * coord.t;
  const double y = displacement(config, coord);
  const double log_norm = 0.25 * std::log(a2 / std::numbers::pi);
  const double phase = 0.5 * wt + a2 * coord.xt * std::sin(wt) - 0.25 * a2 * std::sin(2.0 * wt);
  return {log_norm - 0.5 * a2 * y * y, -phase};
}

cplx coherent_state(const OscillatorConfig& config, const Coordinate& coord) {
  return std::exp(coherent_state_log(config, coord));
}

LogDerivatives coherent_state_log_derivatives(const OscillatorConfig& config,
                                              const Coordinate& coord) {
  const double alpha = config.alpha();
  const double a2 = alpha * alpha;
  const double w = config.angular_frequency();
  const double wt = w * coord.t;
  const double s = std::sin(wt);
  const double c = std::cos(wt);
  const double y = coord.xt - c;

  LogDerivatives d;
  // dy/dt = omega sin(omega t)
  d.d_t = cplx(-a2 * y * w * s,
               -(0.5 * w + a2 * coord.xt * w * c - 0.5 * a2 * w * std::cos(2.0 * wt)));
  d.d_xt = cplx(-a2 * y, -a2 * s);
  d.d_xt_xt = cplx(-a2, 0.0);
  return d;
}

double probability_density(const OscillatorConfig& config, const Coordinate& coord) {
  const double alpha = config.alpha();
  const double u = alpha * displacement(config, coord);
  return alpha / std::sqrt(std::numbers::pi) * std::exp(-u * u);
}

}  // namespace oscinfo
