#include "oscinfo/grid.hpp"

#include <cmath>
#include <string>

#include "oscinfo/errors.hpp"

namespace oscinfo {

Grid1D::Grid1D(double xt_min, double xt_max, std::size_t n_points,
               std::optional<double> time_step)
    : xt_min_(xt_min), xt_max_(xt_max), n_points_(n_points), spacing_(0.0), time_step_(time_step) {
  if (!std::isfinite(xt_min) || !std::isfinite(xt_max) || !(xt_min < xt_max)) {
    throw InputError("grid bounds must be finite with xt_min < xt_max");
  }
  if (n_points < 3) {
    throw InputError("grid needs at least 3 points, got " + std::to_string(n_points));
  }
  if (time_step && (!std::isfinite(*time_step) || *time_step <= 0.0)) {
    throw InputError("grid time step must be positive and finite");
  }
  spacing_ = (xt_max - xt_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = node(i);
  return out;
}

Grid1D Grid1D::refined() const {
  std::optional<double> dt;
  if (time_step_) dt = 0.5 * *time_step_;
  return Grid1D(xt_min_, xt_max_, 2 * n_points_ - 1, dt);
}

double SampledComplexField::time(std::size_t slice) const {
  if (slice == 0) return t_start;
  if (!grid.time_step()) throw InputError("multi-slice field requires a grid time step");
  return t_start + static_cast<double>(slice) * *grid.time_step();
}

double SampledComplexField::discrete_norm(std::size_t slice) const {
  double sum = 0.0;
  for (const cplx& v : slices.at(slice)) sum += std::norm(v);
  return sum * grid.spacing();
}

void SampledComplexField::validate() const {
  if (slices.empty()) throw InputError("field has no time slices");
  if (slices.size() > 1 && !grid.time_step()) {
    throw InputError("multi-slice field requires a grid time step");
  }
  for (const auto& s : slices) {
    if (s.size() != grid.n_points()) throw InputError("field slice size does not match grid");
    for (const cplx& v : s) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw InputError("field contains non-finite samples");
      }
    }
  }
}

SampledComplexField sample_field(const Grid1D& grid, double t_start, std::size_t n_slices,
                                 const FieldFunction& fn) {
  SampledComplexField field{grid, t_start, {}};
  field.slices.resize(n_slices, std::vector<cplx>(grid.n_points()));
  for (std::size_t k = 0; k < n_slices; ++k) {
    const double t = field.time(k);
    for (std::size_t i = 0; i < grid.n_points(); ++i) field.slices[k][i] = fn(grid.node(i), t);
  }
  field.validate();
  return field;
}

SampledComplexField sample_field_centered(const Grid1D& grid, double t_center,
                                          const FieldFunction& fn) {
  if (!grid.time_step()) throw InputError("centred sampling requires a grid time step");
  return sample_field(grid, t_center - *grid.time_step(), 3, fn);
}

SampledComplexField sample_coherent_state(const OscillatorConfig& config, const Grid1D& grid,
                                          double t_start, std::size_t n_slices) {
  return sample_field(grid, t_start, n_slices, [&config](double xt, double t) {
    return coherent_state(config, Coordinate{xt, t});
  });
}

std::vector<double> sample_harmonic_potential(const OscillatorConfig& config,
                                              const Grid1D& grid) {
  std::vector<double> u(grid.n_points());
  for (std::size_t i = 0; i < grid.n_points(); ++i) u[i] = harmonic_potential(config, grid.node(i));
  return u;
}

}  // namespace oscinfo
