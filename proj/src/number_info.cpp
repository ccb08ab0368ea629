#include "oscinfo/number_info.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "oscinfo/errors.hpp"

namespace oscinfo {

namespace {

void require_mean(double mean) {
  if (!std::isfinite(mean) || mean < 0.0) {
    throw InputError("mean occupation must be finite and non-negative, got " + std::to_string(mean));
  }
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InputError("tolerance must be positive");
}

double log_pmf(std::uint64_t n, double mean) {
  if (mean == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  const double nd = static_cast<double>(n);
  return nd * std::log(mean) - mean - std::lgamma(nd + 1.0);
}

std::uint64_t initial_truncation(double mean) {
  return static_cast<std::uint64_t>(std::ceil(mean + 12.0 * std::sqrt(mean) + 30.0));
}

// Sums e^{-mean} mean^n/n! f(n) for n = 0..N. The terms past N shrink at least
// geometrically: term(n+1)/term(n) = mean/(n+1) * f(n+1)/f(n) <= q for every
// n > N, where growth(N) bounds f(n+1)/f(n) there. The tail is then at most
// term(N+1) / (1 - q).
template <class Weight, class Growth>
PoissonSeries poisson_moment(double mean, double tol, Weight f, Growth growth) {
  require_mean(mean);
  require_tol(tol);

  std::uint64_t n_max = initial_truncation(mean);
  double bound = 0.0;
  for (int attempt = 0;; ++attempt) {
    const double q = mean / static_cast<double>(n_max + 2) * growth(n_max);
    const double next = std::exp(log_pmf(n_max + 1, mean)) * f(n_max + 1);
    bound = q < 1.0 ? next / (1.0 - q) : std::numeric_limits<double>::infinity();
    if (bound < tol) break;
    if (attempt > 60) {
      throw NumericError("Poisson series tail bound did not reach tolerance", bound);
    }
    n_max += n_max / 2 + 10;
  }

  // Compensated summation keeps the rounding well below typical tolerances.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const double term = std::exp(log_pmf(n, mean)) * f(n) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return PoissonSeries{sum, n_max, bound};
}

}  // namespace

double poisson_pmf(std::int64_t n, double mean) {
  require_mean(mean);
  if (n < 0) throw InputError("Poisson index must be non-negative");
  return std::exp(log_pmf(static_cast<std::uint64_t>(n), mean));
}

double mean_occupation(const OscillatorConfig& config) {
  const double m = config.mass();
  const double w = config.angular_frequency();
  const double a = config.amplitude();
  const double x2 = 0.5 * a * a;
  const double p2 = 0.5 * m * m * w * w * a * a;
  return 0.5 * (m * w * w * x2 + p2 / m) / config.quantum_energy();
}

PoissonSeries poisson_log_factorial_moment(double mean, double tol) {
  return poisson_moment(
      mean, tol, [](std::uint64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); },
      [](std::uint64_t n_max) {
        const double n = static_cast<double>(n_max);
        return 1.0 + std::log(n + 2.0) / std::lgamma(n + 2.0);
      });
}

PoissonSeries poisson_log_successor_moment(double mean, double tol) {
  return poisson_moment(
      mean, tol, [](std::uint64_t n) { return std::log(static_cast<double>(n) + 1.0); },
      [](std::uint64_t n_max) {
        const double n = static_cast<double>(n_max);
        return std::log(n + 3.0) / std::log(n + 2.0);
      });
}

NumberStateInfo number_information(double mean, double tol) {
  require_mean(mean);
  require_tol(tol);
  NumberStateInfo info;
  info.mean = mean;
  if (mean == 0.0) {
    info.truncation = 0;
    info.information = 0.0;
    info.derivative = std::numeric_limits<double>::infinity();
    info.tail_bound = 0.0;
    return info;
  }
  const PoissonSeries series = poisson_log_factorial_moment(mean, tol);
  info.truncation = series.truncation;
  info.tail_bound = series.tail_bound;
  info.information = mean * (1.0 - std::log(mean)) + series.value;
  info.derivative = number_info_density(mean, tol);
  return info;
}

double number_info_density(double mean, double tol) {
  require_mean(mean);
  require_tol(tol);
  if (mean == 0.0) {
    throw DomainError("number-state information density diverges logarithmically at <n> = 0");
  }
  return poisson_log_successor_moment(mean, tol).value - std::log(mean);
}

}  // namespace oscinfo
