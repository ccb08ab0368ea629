#include "oscinfo/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscinfo/errors.hpp"

namespace oscinfo {

namespace {

constexpr double kMaxOmegaDt = 1e-2;
constexpr double kBoundaryMargin = 8.0;  // in units of 1/alpha
constexpr double kStepNormDrift = 1e-12;

double discrete_norm(const Grid1D& grid, std::span<const cplx> psi) {
  double s = 0.0;
  for (const cplx& v : psi) s += std::norm(v);
  return s * grid.spacing();
}

}  // namespace

CrankNicolsonPropagator::CrankNicolsonPropagator(const Grid1D& grid,
                                                 std::span<const double> potential,
                                                 const OscillatorConfig& config, double dt)
    : n_(grid.n_points()), dt_(dt) {
  if (potential.size() != n_) throw InputError("potential must be sampled at every grid node");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("time step must be positive");

  // With M = I + (h^2/12) D2 and H = -(hbar^2/2m a^2) M^{-1} D2 + U, the
  // Cayley step (I + i tau H) psi' = (I - i tau H) psi, tau = dt / 2 hbar,
  // multiplied through by M becomes tridiagonal:
  //   (M - i tau c D2 + i tau M U) psi' = (M + i tau c D2 - i tau M U) psi.
  // M^{-1} D2 is symmetric, so H is Hermitian and the step is unitary.
  const double hbar = config.hbar();
  const double ah = config.amplitude() * grid.spacing();
  const double kappa = hbar * hbar / (2.0 * config.mass() * ah * ah);
  const cplx i_tau(0.0, 0.5 * dt / hbar);
  constexpr double m_off = 1.0 / 12.0;
  constexpr double m_diag = 10.0 / 12.0;

  const std::size_t m = n_ - 2;
  lhs_lower_.resize(m);
  lhs_diag_.resize(m);
  lhs_upper_.resize(m);
  rhs_lower_.resize(m);
  rhs_diag_.resize(m);
  rhs_upper_.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j + 1;
    const cplx h_lower = -kappa + m_off * potential[i - 1];
    const cplx h_diag = 2.0 * kappa + m_diag * potential[i];
    const cplx h_upper = -kappa + m_off * potential[i + 1];
    lhs_lower_[j] = m_off + i_tau * h_lower;
    lhs_diag_[j] = m_diag + i_tau * h_diag;
    lhs_upper_[j] = m_off + i_tau * h_upper;
    rhs_lower_[j] = m_off - i_tau * h_lower;
    rhs_diag_[j] = m_diag - i_tau * h_diag;
    rhs_upper_[j] = m_off - i_tau * h_upper;
  }

  c_prime_.resize(m);
  inv_denom_.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const cplx denom = lhs_diag_[j] - (j > 0 ? lhs_lower_[j] * c_prime_[j - 1] : cplx{});
    if (std::abs(denom) == 0.0) throw NumericError("tridiagonal factorization broke down");
    inv_denom_[j] = 1.0 / denom;
    c_prime_[j] = lhs_upper_[j] * inv_denom_[j];
  }
  work_.resize(m);
}

void CrankNicolsonPropagator::step(std::vector<cplx>& psi) {
  if (psi.size() != n_) throw InputError("state size does not match propagator grid");
  const std::size_t m = n_ - 2;
  psi.front() = 0.0;
  psi.back() = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j + 1;
    work_[j] = rhs_lower_[j] * psi[i - 1] + rhs_diag_[j] * psi[i] + rhs_upper_[j] * psi[i + 1];
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0) work_[j] -= lhs_lower_[j] * work_[j - 1];
    work_[j] *= inv_denom_[j];
  }
  psi[m] = work_[m - 1];
  for (std::size_t j = m - 1; j-- > 0;) {
    work_[j] -= c_prime_[j] * work_[j + 1];
    psi[j + 1] = work_[j];
  }
}

double mean_position(const Grid1D& grid, std::span<const cplx> psi) {
  double s = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) s += grid.node(i) * std::norm(psi[i]);
  return s * grid.spacing();
}

double overlap(const Grid1D& grid, std::span<const cplx> psi, std::span<const cplx> reference) {
  cplx s{};
  for (std::size_t i = 0; i < psi.size(); ++i) s += std::conj(psi[i]) * reference[i];
  return std::abs(s) * grid.spacing();
}

EvolutionResult evolve(const SampledComplexField& initial, std::span<const double> potential,
                       double dt, std::size_t steps, const OscillatorConfig& config,
                       const EvolveOptions& options) {
  initial.validate();
  const Grid1D& grid = initial.grid;
  if (!(dt > 0.0) || config.angular_frequency() * dt > kMaxOmegaDt) {
    throw ConfigError("time step violates the accuracy guard omega*dt <= 1e-2 (omega*dt = " +
                      std::to_string(config.angular_frequency() * dt) + ")");
  }
  const double margin = kBoundaryMargin / config.alpha();
  if (grid.xt_min() > -1.0 - margin + 1e-12 || grid.xt_max() < 1.0 + margin - 1e-12) {
    throw ConfigError("Dirichlet boundaries must lie at least 8/alpha beyond the turning points: need [" +
                      std::to_string(-1.0 - margin) + ", " + std::to_string(1.0 + margin) + "]");
  }
  const std::size_t record_every = std::max<std::size_t>(1, options.record_every);

  CrankNicolsonPropagator propagator(grid, potential, config, dt);
  std::vector<cplx> psi = initial.slices.front();
  psi.front() = 0.0;
  psi.back() = 0.0;

  std::vector<EvolutionSnapshot> snapshots;
  double max_drift = 0.0;
  std::vector<cplx> reference(grid.n_points());
  auto record = [&](double t) {
    EvolutionSnapshot snap;
    snap.t = t;
    snap.norm = discrete_norm(grid, psi);
    snap.mean_xt = mean_position(grid, psi) / snap.norm;
    if (options.reference) {
      for (std::size_t i = 0; i < grid.n_points(); ++i) reference[i] = options.reference(grid.node(i), t);
      snap.overlap = overlap(grid, psi, reference);
    }
    snapshots.push_back(snap);
  };

  const double t0 = initial.t_start;
  record(t0);
  double norm = discrete_norm(grid, psi);
  for (std::size_t s = 1; s <= steps; ++s) {
    propagator.step(psi);
    const double next_norm = discrete_norm(grid, psi);
    const double drift = std::abs(next_norm - norm) / norm;
    max_drift = std::max(max_drift, drift);
    if (!(drift <= kStepNormDrift)) {
      throw NumericError("Crank-Nicolson step lost unitarity, relative norm change " +
                         std::to_string(drift), drift);
    }
    norm = next_norm;
    if (s % record_every == 0 || s == steps) record(t0 + static_cast<double>(s) * dt);
  }

  SampledComplexField final_state{grid, t0 + static_cast<double>(steps) * dt, {std::move(psi)}};
  return EvolutionResult{std::move(snapshots), std::move(final_state), max_drift};
}

}  // namespace oscinfo
