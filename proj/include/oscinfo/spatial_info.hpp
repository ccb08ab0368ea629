#pragma once

#include <vector>

#include "oscinfo/grid.hpp"
#include "oscinfo/oscillator.hpp"

namespace oscinfo {

/// Ordered breakpoints xt_0 < xt_1 < ... < xt_N. Infinite end points are
/// allowed and denote the half lines.
class Partition1D {
 public:
  /// Throws InputError unless there are at least two strictly increasing
  /// breakpoints.
  explicit Partition1D(std::vector<double> breakpoints);

  /// n_cells equal cells over [lo, hi].
  static Partition1D uniform(double lo, double hi, std::size_t n_cells);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  std::size_t n_cells() const noexcept { return breakpoints_.size() - 1; }

 private:
  std::vector<double> breakpoints_;
};

/// Sampled information (or energy) density; y is the displacement from the
/// classical trajectory at the sampled instant.
struct InfoDensityCurve {
  std::vector<double> xt;
  std::vector<double> y;
  std::vector<double> density;
};

/// 1 + ln(sqrt(pi)).
double info_constant();

/// Probability of finding the particle with xt in [xt_lo, xt_hi] at time t:
/// (erf(alpha y_hi) - erf(alpha y_lo)) / 2. Throws InputError if xt_lo > xt_hi.
double partition_probability(const OscillatorConfig& config, double t, double xt_lo,
                             double xt_hi);

/// Shannon entropy -sum p ln p (nats) over the cells of the partition. When the
/// partition misses more than 1e-12 of the mass, one complement cell holding
/// the remainder is appended.
double discrete_entropy(const OscillatorConfig& config, double t, const Partition1D& partition);

/// Continuum information density per unit xt:
///   alpha / (2 sqrt(pi)) exp(-(alpha y)^2) [1 + ln(pi)/2 + (alpha y)^2]
double info_density(const OscillatorConfig& config, const Coordinate& coord);

/// Same functional form evaluated directly from alpha and y.
double info_density_at_displacement(double alpha, double y);

/// The Riemann-sum integrand of the refined partition entropy. Its prefactor
/// alpha/sqrt(pi) is exactly twice that of info_density.
double info_density_s6_variant(const OscillatorConfig& config, const Coordinate& coord);

/// Integral of info_density over the real line. Adaptive Gauss-Kronrod on
/// |alpha y| <= 8 plus the closed-form Gaussian tails. Throws NumericError if
/// the quadrature misses its 1e-10 absolute tolerance. Independent of t and
/// alpha; the closed form is info_constant()/2 + 1/4.
double total_information(const OscillatorConfig& config, double t = 0.0);

/// Differential entropy of |Psi|^2 in xt: ln(sqrt(pi e) / alpha).
double differential_entropy(const OscillatorConfig& config);

InfoDensityCurve density_curve(const OscillatorConfig& config, double t, const Grid1D& grid);

/// Full width at half maximum of info_density in xt; scales as 1/alpha.
double info_density_fwhm(const OscillatorConfig& config);

}  // namespace oscinfo
