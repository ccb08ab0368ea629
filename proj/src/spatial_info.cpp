#include "oscinfo/spatial_info.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oscinfo/errors.hpp"

namespace oscinfo {

namespace {

constexpr double kQuadratureTolerance = 1e-10;
constexpr double kQuadratureHalfWidth = 8.0;  // in units of 1/alpha
constexpr double kComplementThreshold = 1e-12;

// Mass of the standard Gaussian exp(-u^2)/sqrt(pi) between u_lo and u_hi,
// evaluated on the side of zero that avoids cancellation.
double gaussian_mass(double u_lo, double u_hi) {
  if (u_lo >= 0.0) return 0.5 * (std::erfc(u_lo) - std::erfc(u_hi));
  if (u_hi <= 0.0) return 0.5 * (std::erfc(-u_hi) - std::erfc(-u_lo));
  return 0.5 * (std::erf(u_hi) - std::erf(u_lo));
}

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

Partition1D::Partition1D(std::vector<double> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) throw InputError("partition needs at least two breakpoints");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (std::isnan(breakpoints_[i]) || !(breakpoints_[i] < breakpoints_[i + 1])) {
      throw InputError("partition breakpoints must be strictly increasing");
    }
  }
}

Partition1D Partition1D::uniform(double lo, double hi, std::size_t n_cells) {
  if (n_cells == 0) throw InputError("uniform partition needs at least one cell");
  std::vector<double> b(n_cells + 1);
  const double width = (hi - lo) / static_cast<double>(n_cells);
  for (std::size_t i = 0; i <= n_cells; ++i) b[i] = lo + static_cast<double>(i) * width;
  b.back() = hi;
  return Partition1D(std::move(b));
}

double info_constant() { return 1.0 + 0.5 * std::log(std::numbers::pi); }

double partition_probability(const OscillatorConfig& config, double t, double xt_lo,
                             double xt_hi) {
  if (std::isnan(xt_lo) || std::isnan(xt_hi) || xt_lo > xt_hi) {
    throw InputError("partition interval must satisfy xt_lo <= xt_hi");
  }
  const double alpha = config.alpha();
  const double center = classical_trajectory(config, t);
  return gaussian_mass(alpha * (xt_lo - center), alpha * (xt_hi - center));
}

double discrete_entropy(const OscillatorConfig& config, double t, const Partition1D& partition) {
  const auto& b = partition.breakpoints();
  double entropy = 0.0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    entropy -= plogp(partition_probability(config, t, b[i], b[i + 1]));
  }
  const double inf = std::numeric_limits<double>::infinity();
  const double complement = partition_probability(config, t, -inf, b.front()) +
                            partition_probability(config, t, b.back(), inf);
  if (complement > kComplementThreshold) entropy -= plogp(complement);
  return entropy;
}

double info_density_at_displacement(double alpha, double y) {
  const double u2 = (alpha * y) * (alpha * y);
  return alpha / (2.0 * std::sqrt(std::numbers::pi)) * std::exp(-u2) * (info_constant() + u2);
}

double info_density(const OscillatorConfig& config, const Coordinate& coord) {
  return info_density_at_displacement(config.alpha(), displacement(config, coord));
}

double info_density_s6_variant(const OscillatorConfig& config, const Coordinate& coord) {
  return 2.0 * info_density(config, coord);
}

double total_information(const OscillatorConfig& config, double t) {
  using boost::math::quadrature::gauss_kronrod;
  const double alpha = config.alpha();
  const double center = classical_trajectory(config, t);
  const double half_width = kQuadratureHalfWidth / alpha;

  auto integrand = [&](double xt) { return info_density(config, Coordinate{xt, t}); };
  double error = 0.0;
  const double core = gauss_kronrod<double, 15>::integrate(
      integrand, center - half_width, center + half_width, 20, 1e-13, &error);
  if (!(error <= kQuadratureTolerance)) {
    throw NumericError("information quadrature did not converge, achieved error " +
                       std::to_string(error),
                       error);
  }

  // Both tails |u| > U in closed form:
  //   int_U^inf exp(-u^2) du = sqrt(pi)/2 erfc(U)
  //   int_U^inf u^2 exp(-u^2) du = U exp(-U^2)/2 + sqrt(pi)/4 erfc(U)
  const double u = kQuadratureHalfWidth;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const double m0 = 0.5 * sqrt_pi * std::erfc(u);
  const double m2 = 0.5 * u * std::exp(-u * u) + 0.25 * sqrt_pi * std::erfc(u);
  const double tails = 2.0 * (info_constant() * m0 + m2) / (2.0 * sqrt_pi);
  return core + tails;
}

double differential_entropy(const OscillatorConfig& config) {
  return std::log(std::sqrt(std::numbers::pi * std::numbers::e) / config.alpha());
}

InfoDensityCurve density_curve(const OscillatorConfig& config, double t, const Grid1D& grid) {
  InfoDensityCurve curve;
  curve.xt = grid.nodes();
  curve.y.reserve(grid.n_points());
  curve.density.reserve(grid.n_points());
  for (double xt : curve.xt) {
    const Coordinate c{xt, t};
    curve.y.push_back(displacement(config, c));
    curve.density.push_back(info_density(config, c));
  }
  return curve;
}

double info_density_fwhm(const OscillatorConfig& config) {
  // Symmetric in y and strictly decreasing for y > 0 (the bracket constant
  // exceeds one), so the half-maximum point is a single root on (0, 4/alpha).
  const double alpha = config.alpha();
  const double half_peak = 0.5 * info_density_at_displacement(alpha, 0.0);
  auto f = [&](double y) { return info_density_at_displacement(alpha, y) - half_peak; };
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iterations = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, 4.0 / alpha, tol, iterations);
  return lo + hi;
}

}  // namespace oscinfo
