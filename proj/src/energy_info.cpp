#include "oscinfo/energy_info.hpp"

#include <cmath>
#include <numbers>

#include "oscinfo/errors.hpp"
#include "oscinfo/spatial_info.hpp"

namespace oscinfo {

double classical_energy(const OscillatorConfig& config) {
  const double w = config.angular_frequency();
  const double a = config.amplitude();
  return 0.5 * config.mass() * w * w * a * a;
}

double energy_density(const OscillatorConfig& config, const Coordinate& coord) {
  const double alpha = config.alpha();
  const double y = displacement(config, coord);
  return alpha / std::sqrt(std::numbers::pi) * classical_energy(config) *
         std::exp(-alpha * alpha * y * y) * (2.0 * coord.xt * y + 1.0);
}

double lagrangian_energy_density(const OscillatorConfig& config, const Coordinate& coord) {
  const double a = config.amplitude();
  const cplx psi = coherent_state(config, coord);
  const cplx grad_xt = psi * coherent_state_log_derivatives(config, coord).d_xt;
  const double hbar = config.hbar();
  const double kinetic = hbar * hbar / (2.0 * config.mass() * a * a) * std::norm(grad_xt);
  return -(kinetic + harmonic_potential(config, coord.xt) * std::norm(psi));
}

double energy_per_info(const OscillatorConfig& config, const Coordinate& coord) {
  const double alpha = config.alpha();
  const double y = displacement(config, coord);
  return (2.0 * coord.xt * y + 1.0) / (info_constant() / (alpha * alpha) + y * y);
}

EnergyInfoSample energy_info_sample(const OscillatorConfig& config, const Coordinate& coord) {
  return EnergyInfoSample{coord, energy_density(config, coord), energy_per_info(config, coord)};
}

EnergyInfoSurface energy_info_surface(const OscillatorConfig& config, const Grid1D& grid,
                                      const std::vector<double>& times) {
  if (times.empty()) throw InputError("energy surface needs at least one time");
  EnergyInfoSurface surface;
  surface.xt = grid.nodes();
  surface.times = times;
  surface.ratio.reserve(times.size() * surface.xt.size());
  for (double t : times) {
    for (double xt : surface.xt) surface.ratio.push_back(energy_per_info(config, Coordinate{xt, t}));
  }
  return surface;
}

}  // namespace oscinfo
