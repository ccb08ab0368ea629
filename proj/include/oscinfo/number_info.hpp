#pragma once

#include <cstdint>

#include "oscinfo/oscillator.hpp"

namespace oscinfo {

/// Number-state Shannon information of a coherent state with Poisson
/// occupation statistics.
struct NumberStateInfo {
  double mean = 0.0;
  /// Last index n kept in the series.
  std::uint64_t truncation = 0;
  /// -sum P_n ln P_n, nats.
  double information = 0.0;
  /// dI/d<n>; +infinity at mean = 0 (logarithmic divergence).
  double derivative = 0.0;
  /// Certified bound on the discarded tail of the information series.
  double tail_bound = 0.0;
};

/// <n>^n e^{-<n>} / n!, evaluated in log space. Throws InputError for
/// negative or non-finite arguments.
double poisson_pmf(std::int64_t n, double mean);

/// <n> = (m omega^2 <x^2> + <p^2>/m) / (2 hbar omega) with the classical time
/// averages <x^2> = a^2/2, <p^2> = m^2 omega^2 a^2 / 2; equals alpha^2/2.
double mean_occupation(const OscillatorConfig& config);

/// I = <n>(1 - ln<n>) + e^{-<n>} sum_n <n>^n/n! ln(n!), with the series cut
/// where the tail bound drops below tol. At mean = 0 the information is 0.
NumberStateInfo number_information(double mean, double tol = 1e-13);

/// dI/d<n> = e^{-<n>} sum_n <n>^n/n! ln(n+1) - ln<n>.
/// Throws DomainError at mean = 0 and InputError for mean < 0 or tol <= 0.
double number_info_density(double mean, double tol = 1e-13);

/// Truncated series value with its certified tail bound.
struct PoissonSeries {
  double value = 0.0;
  std::uint64_t truncation = 0;
  double tail_bound = 0.0;
};

/// e^{-mean} sum_{n=0}^{N} mean^n/n! ln(n!)
PoissonSeries poisson_log_factorial_moment(double mean, double tol);
/// e^{-mean} sum_{n=0}^{N} mean^n/n! ln(n+1)
PoissonSeries poisson_log_successor_moment(double mean, double tol);

}  // namespace oscinfo
