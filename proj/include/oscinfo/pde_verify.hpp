#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oscinfo/grid.hpp"
#include "oscinfo/oscillator.hpp"

namespace oscinfo {

/// Statistics of a finite-difference PDE residual over interior nodes.
struct ResidualReport {
  double max_abs = 0.0;
  /// Root mean square over evaluated nodes.
  double l2 = 0.0;
  double h = 0.0;
  double dt = 0.0;
  /// Empirical order from a coarse/fine pair; see with_convergence_order.
  std::optional<double> order_estimate;
  std::size_t evaluated_nodes = 0;
  /// Nodes excluded because the amplitude fell below the log-transform floor.
  std::size_t flagged_nodes = 0;
};

/// Copy of `fine` with order_estimate = log(coarse.max / fine.max) / log(coarse.h / fine.h).
ResidualReport with_convergence_order(const ResidualReport& coarse, const ResidualReport& fine);

/// S = (hbar/i) ln Psi on the same grid and slices as the source field.
struct SampledAction {
  Grid1D grid;
  double t_start = 0.0;
  std::vector<std::vector<cplx>> slices;
  /// False where |Psi| < 1e-30 max|Psi| in any slice.
  std::vector<bool> valid;

  std::size_t flagged() const;
};

/// Log transform with the phase unwrapped continuously along the grid (and
/// across slices at the first valid node). Throws InputError when adjacent
/// valid nodes differ in phase by more than pi/2 (under-resolved field).
SampledAction hj_action_from_wavefunction(const SampledComplexField& field,
                                          const OscillatorConfig& config);

/// A = hbar / i, the constant in S = A ln Psi.
cplx transform_constant(const OscillatorConfig& config);

/// Viscosity that cancels the (grad Psi)^2 term after the log transform:
/// nu* = -A / 2m = i hbar / 2m.
cplx cancellation_viscosity(const OscillatorConfig& config);

/// R = i hbar Psi_t + (hbar^2/2m) Psi_xx - U Psi with centred three-point
/// stencils at the middle of three slices. Physical x = a xt.
ResidualReport schrodinger_residual(const SampledComplexField& field,
                                    std::span<const double> potential,
                                    const OscillatorConfig& config);

/// R = S_t + (S_x)^2 / 2m + U - nu S_xx at the middle of three slices.
ResidualReport hj_residual(const SampledAction& action, std::span<const double> potential,
                           cplx nu, const OscillatorConfig& config);

struct TransformIdentityReport {
  /// |Psi R_HJ(S(Psi), nu) + R_Sch(Psi)|.
  ResidualReport identity;
  double max_hj_scaled = 0.0;    // max |Psi R_HJ|
  double max_schrodinger = 0.0;  // max |R_Sch|
  cplx nu;
};

/// Evaluates the log-transform identity on an arbitrary smooth nonvanishing
/// field. nu defaults to cancellation_viscosity(config).
TransformIdentityReport transform_identity_residual(const SampledComplexField& field,
                                                    std::span<const double> potential,
                                                    const OscillatorConfig& config,
                                                    std::optional<cplx> nu = std::nullopt);

struct ViscosityEstimate {
  cplx nu;
  /// RMS of the remaining nonlinear term at nu.
  double residual_at_nu = 0.0;
};

/// Least-squares nu that removes the nonlinear term
///   Psi (S_x)^2 / 2m - nu Psi S_xx + nu A Psi_xx   (= (A^2/2m + nu A)(Psi_x)^2/Psi)
/// over all interior nodes of all fields. Uses the middle slice of
/// three-slice fields. Throws InputError for fewer than three fields and
/// NumericError when the fields carry no gradient information.
ViscosityEstimate viscosity_fit(std::span<const SampledComplexField> fields,
                                const OscillatorConfig& config);

/// RMS of the nonlinear term above at a given nu.
double nonlinear_residual(std::span<const SampledComplexField> fields, cplx nu,
                          const OscillatorConfig& config);

/// Delta epsilon = -int [(hbar/i) Psi* Psi_t + (hbar^2/2m)|grad Psi|^2 + U|Psi|^2] dx
/// with centred finite differences at the middle slice. Throws InputError if
/// that slice's norm deviates from one by more than 1e-6.
double delta_epsilon_average(const SampledComplexField& field, std::span<const double> potential,
                             const OscillatorConfig& config);

/// Same functional with caller-supplied derivatives (per unit t and xt).
double delta_epsilon_average(const Grid1D& grid, std::span<const cplx> psi,
                             std::span<const cplx> psi_t, std::span<const cplx> psi_xt,
                             std::span<const double> potential, const OscillatorConfig& config);

/// The three terms of -(S_t + grad S . grad S* / 2m + U) on the classical
/// trajectory xt = cos(omega t), from analytic coherent-state derivatives.
struct EnergyGapTerms {
  double action_rate = 0.0;  // dS/dt
  double kinetic = 0.0;      // grad S . grad S* / 2m
  double potential = 0.0;    // U
  double gap = 0.0;          // -(sum), equals hbar omega / 2
};

EnergyGapTerms on_trajectory_energy_gap(const OscillatorConfig& config, double t);

/// Particle-like S_p = -E t + p.x and wave-like S_w = exp[-i(omega t - k.x)]
/// solutions of (S_t)^2 - (grad S)^2 = 0 (c = 1), with E = hbar omega and
/// p = Re[(hbar/i) grad ln S_w].
struct MasslessDualReport {
  double energy = 0.0;
  std::array<double, 3> momentum{};
  /// |E^2 - |p|^2|
  double particle_residual = 0.0;
  /// |omega^2 - |k|^2| |S_w|^2 at the origin
  double wave_residual = 0.0;
  /// max_i |p_i - hbar k_i|
  double de_broglie_mismatch = 0.0;
  /// max |S_p - (hbar/i) ln S_w| over sample points with |omega t - k.x| < pi
  double action_mismatch = 0.0;
};

MasslessDualReport massless_dual_residuals(double omega_wave, const std::array<double, 3>& k,
                                           const OscillatorConfig& config);

/// Smooth test field c0 + sum_j c_j exp(i(k_j xt - w_j t)) with the real offset
/// c0 >= 2 sum |c_j|, so |Psi| >= sum |c_j| > 0 and |arg Psi| < pi/6.
class BandLimitedField {
 public:
  struct Mode {
    cplx amplitude;
    double wavenumber;
    double frequency;
  };

  BandLimitedField(double offset, std::vector<Mode> modes);

  /// Deterministic random field: n_modes <= 8, |k| <= max_wavenumber,
  /// |w| <= max_frequency, mode magnitudes in [0.2, 1].
  static BandLimitedField random(std::uint64_t seed, std::size_t n_modes = 8,
                                 double max_wavenumber = 4.0, double max_frequency = 2.0);

  cplx operator()(double xt, double t) const;
  double offset() const noexcept { return offset_; }
  const std::vector<Mode>& modes() const noexcept { return modes_; }

 private:
  double offset_;
  std::vector<Mode> modes_;
};

}  // namespace oscinfo
