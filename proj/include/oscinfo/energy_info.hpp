#pragma once

#include <vector>

#include "oscinfo/grid.hpp"
#include "oscinfo/oscillator.hpp"

namespace oscinfo {

struct EnergyInfoSample {
  Coordinate coord;
  /// Energy per unit xt.
  double energy_density = 0.0;
  /// dE/dI in units of hbar omega.
  double ratio = 0.0;
};

/// Energy-per-information ratio tabulated over (xt, t); values are stored
/// row-major with one row per time.
struct EnergyInfoSurface {
  std::vector<double> xt;
  std::vector<double> times;
  std::vector<double> ratio;

  double at(std::size_t time_index, std::size_t node) const {
    return ratio[time_index * xt.size() + node];
  }
};

/// E_cl = m omega^2 a^2 / 2 = hbar omega alpha^2 / 2.
double classical_energy(const OscillatorConfig& config);

/// dE/dxt = (alpha/sqrt(pi)) E_cl exp(-alpha^2 y^2) [2 xt y + 1].
///
/// The bracket equals xt^2 + y^2 + sin^2(omega t) and is therefore never below
/// 1/2, so the density is strictly positive.
double energy_density(const OscillatorConfig& config, const Coordinate& coord);

/// T_00 = -(hbar^2/2m |grad Psi|^2 + U |Psi|^2) per unit xt, from the field
/// Lagrangian with analytic coherent-state gradients. Negative definite;
/// its magnitude equals energy_density.
double lagrangian_energy_density(const OscillatorConfig& config, const Coordinate& coord);

/// (1/hbar omega) dE/dI = [2 xt y + 1] / [(1 + ln sqrt(pi))/alpha^2 + y^2].
double energy_per_info(const OscillatorConfig& config, const Coordinate& coord);

EnergyInfoSample energy_info_sample(const OscillatorConfig& config, const Coordinate& coord);

/// Throws InputError for an empty time list.
EnergyInfoSurface energy_info_surface(const OscillatorConfig& config, const Grid1D& grid,
                                      const std::vector<double>& times);

}  // namespace oscinfo
