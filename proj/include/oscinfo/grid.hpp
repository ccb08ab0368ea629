#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "oscinfo/oscillator.hpp"

namespace oscinfo {

/// Uniform grid over the dimensionless coordinate xt, with an optional time
/// step for fields sampled at several instants.
class Grid1D {
 public:
  /// Throws InputError unless xt_min < xt_max, n_points >= 3 and the time
  /// step (when given) is positive.
  Grid1D(double xt_min, double xt_max, std::size_t n_points,
         std::optional<double> time_step = std::nullopt);

  double xt_min() const noexcept { return xt_min_; }
  double xt_max() const noexcept { return xt_max_; }
  std::size_t n_points() const noexcept { return n_points_; }
  double spacing() const noexcept { return spacing_; }
  std::optional<double> time_step() const noexcept { return time_step_; }

  double node(std::size_t i) const noexcept {
    return xt_min_ + static_cast<double>(i) * spacing_;
  }
  std::vector<double> nodes() const;

  /// Same interval with half the spacing (2n-1 points) and half the time step.
  Grid1D refined() const;

 private:
  double xt_min_;
  double xt_max_;
  std::size_t n_points_;
  double spacing_;
  std::optional<double> time_step_;
};

/// Complex amplitudes on a Grid1D at one or more equally spaced instants.
/// Slice k is taken at t_start + k * grid.time_step().
struct SampledComplexField {
  Grid1D grid;
  double t_start = 0.0;
  std::vector<std::vector<cplx>> slices;

  std::size_t n_slices() const noexcept { return slices.size(); }
  double time(std::size_t slice) const;
  /// Sum |Psi_j|^2 h over the slice.
  double discrete_norm(std::size_t slice = 0) const;
  /// Throws InputError on shape mismatch or non-finite samples.
  void validate() const;
};

using FieldFunction = std::function<cplx(double xt, double t)>;

SampledComplexField sample_field(const Grid1D& grid, double t_start, std::size_t n_slices,
                                 const FieldFunction& fn);

/// Three slices centred on t_center, spaced by the grid's time step.
SampledComplexField sample_field_centered(const Grid1D& grid, double t_center,
                                          const FieldFunction& fn);

SampledComplexField sample_coherent_state(const OscillatorConfig& config, const Grid1D& grid,
                                          double t_start, std::size_t n_slices = 1);

/// Harmonic potential (energy units) at every grid node.
std::vector<double> sample_harmonic_potential(const OscillatorConfig& config,
                                              const Grid1D& grid);

}  // namespace oscinfo
