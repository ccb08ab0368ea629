#pragma once

#include <complex>

namespace oscinfo {

using cplx = std::complex<double>;

/// Physical parameters of a one-dimensional harmonic oscillator.
///
/// All four base quantities must be strictly positive and finite. The
/// dimensionless ratio alpha = a*sqrt(m*omega/hbar) = a/lambda_db controls
/// the quantum (alpha ~ 1) to classical (alpha >> 1) transition.
class OscillatorConfig {
 public:
  /// Throws InputError if any parameter is non-positive or non-finite.
  OscillatorConfig(double mass, double angular_frequency, double amplitude,
                   double hbar = 1.0);

  /// Units hbar = m = omega = 1 with amplitude a = alpha.
  static OscillatorConfig with_alpha(double alpha);

  double mass() const noexcept { return mass_; }
  double angular_frequency() const noexcept { return omega_; }
  double amplitude() const noexcept { return amplitude_; }
  double hbar() const noexcept { return hbar_; }

  double alpha() const noexcept;
  /// hbar / (m a omega). a over this is alpha^2, so it only equals a/alpha at alpha = 1.
  double de_broglie_wavelength() const noexcept;
  /// hbar * omega.
  double quantum_energy() const noexcept { return hbar_ * omega_; }

 private:
  double mass_;
  double omega_;
  double amplitude_;
  double hbar_;
};

/// A point (x/a, t). The displacement y = x/a - cos(omega t) vanishes on the
/// classical trajectory.
struct Coordinate {
  double xt = 0.0;
  double t = 0.0;
};

double displacement(const OscillatorConfig& config, const Coordinate& coord);

/// cos(omega t): the classical position in units of the amplitude.
double classical_trajectory(const OscillatorConfig& config, double t);

/// U = m omega^2 a^2 xt^2 / 2.
double harmonic_potential(const OscillatorConfig& config, double xt);

/// Natural log of the coherent-state amplitude, including normalization.
///
///   ln Psi = ln((alpha^2/pi)^(1/4)) - alpha^2 y^2 / 2
///            - i (omega t / 2 + alpha^2 xt sin(omega t) - alpha^2 sin(2 omega t) / 4)
///
/// The imaginary part is the continuous (unwrapped) phase.
cplx coherent_state_log(const OscillatorConfig& config, const Coordinate& coord);

/// Coherent state Psi(xt, t), normalized so that the integral of |Psi|^2
/// over xt is one.
cplx coherent_state(const OscillatorConfig& config, const Coordinate& coord);

/// Analytic partial derivatives of ln Psi.
struct LogDerivatives {
  cplx d_t;         // per unit time
  cplx d_xt;        // per unit xt
  cplx d_xt_xt;     // per unit xt^2
};

LogDerivatives coherent_state_log_derivatives(const OscillatorConfig& config,
                                              const Coordinate& coord);

/// (alpha / sqrt(pi)) exp(-alpha^2 y^2), per unit xt.
double probability_density(const OscillatorConfig& config, const Coordinate& coord);

}  // namespace oscinfo
