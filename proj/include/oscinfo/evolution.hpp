#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oscinfo/grid.hpp"
#include "oscinfo/oscillator.hpp"

namespace oscinfo {

/// Implicit-midpoint (Crank-Nicolson) propagator for
///   i hbar Psi_t = -(hbar^2 / 2m a^2) Psi_xt,xt + U Psi
/// with Dirichlet-zero boundaries and the compact fourth-order (Numerov)
/// Laplacian. One complex tridiagonal solve per step; the factorization is
/// computed once. An instance owns scratch storage and must
/// not be stepped from two threads at once.
class CrankNicolsonPropagator {
 public:
  CrankNicolsonPropagator(const Grid1D& grid, std::span<const double> potential,
                          const OscillatorConfig& config, double dt);

  /// Advances psi (all grid nodes; boundary values are forced to zero) by dt.
  void step(std::vector<cplx>& psi);

  double dt() const noexcept { return dt_; }

 private:
  std::size_t n_;
  double dt_;
  // Interior rows of the implicit (lhs) and explicit (rhs) operators.
  std::vector<cplx> lhs_lower_, lhs_diag_, lhs_upper_;
  std::vector<cplx> rhs_lower_, rhs_diag_, rhs_upper_;
  std::vector<cplx> c_prime_;  // Thomas forward-sweep coefficients
  std::vector<cplx> inv_denom_;
  std::vector<cplx> work_;
};

struct EvolutionSnapshot {
  double t = 0.0;
  double norm = 0.0;
  double mean_xt = 0.0;
  /// |sum conj(Psi) Psi_ref h| when a reference solution is supplied.
  std::optional<double> overlap;
};

struct EvolveOptions {
  /// Record a snapshot every this many steps (and always at the end).
  std::size_t record_every = 1;
  /// Optional exact solution for overlap reporting.
  FieldFunction reference;
};

struct EvolutionResult {
  std::vector<EvolutionSnapshot> snapshots;
  SampledComplexField final_state;
  /// Largest relative change of the discrete norm over a single step.
  double max_step_norm_drift = 0.0;
};

/// Advances slice 0 of `initial` by `steps` steps of size dt.
///
/// Throws ConfigError before stepping when omega dt > 1e-2 or when the
/// Dirichlet boundaries lie closer than 8/alpha to the classical turning
/// points xt = +-1. Throws NumericError if a step changes the discrete norm by
/// more than 1e-12 (relative).
EvolutionResult evolve(const SampledComplexField& initial, std::span<const double> potential,
                       double dt, std::size_t steps, const OscillatorConfig& config,
                       const EvolveOptions& options = {});

double mean_position(const Grid1D& grid, std::span<const cplx> psi);
double overlap(const Grid1D& grid, std::span<const cplx> psi, std::span<const cplx> reference);

}  // namespace oscinfo
