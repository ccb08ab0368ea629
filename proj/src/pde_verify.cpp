#include "oscinfo/pde_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "oscinfo/errors.hpp"

namespace oscinfo {

namespace {

constexpr double kAmplitudeFloor = 1e-30;
constexpr double kMaxPhaseStep = 0.5 * std::numbers::pi;
constexpr double kNormTolerance = 1e-6;

double fold_phase(double d) {
  // into (-pi, pi]
  const double two_pi = 2.0 * std::numbers::pi;
  d = std::remainder(d, two_pi);
  if (d <= -std::numbers::pi) d += two_pi;
  return d;
}

// Accumulates max / RMS of residual magnitudes.
class ResidualStats {
 public:
  void add(double magnitude) {
    max_ = std::max(max_, magnitude);
    sum_sq_ += magnitude * magnitude;
    ++count_;
  }

  ResidualReport report(double h, double dt, std::size_t flagged) const {
    ResidualReport r;
    r.max_abs = max_;
    r.l2 = count_ > 0 ? std::sqrt(sum_sq_ / static_cast<double>(count_)) : 0.0;
    r.h = h;
    r.dt = dt;
    r.evaluated_nodes = count_;
    r.flagged_nodes = flagged;
    return r;
  }

 private:
  double max_ = 0.0;
  double sum_sq_ = 0.0;
  std::size_t count_ = 0;
};

void require_three_slices(const SampledComplexField& field) {
  field.validate();
  if (field.n_slices() != 3) throw InputError("residual evaluation needs exactly three time slices");
}

void require_potential(std::span<const double> potential, const Grid1D& grid) {
  if (potential.size() != grid.n_points()) {
    throw InputError("potential must be sampled at every grid node");
  }
}

std::size_t centre_slice(std::size_t n_slices) { return n_slices == 3 ? 1 : 0; }

// Centred stencils in physical units (x = a xt) at node i of slice `mid`.
struct Stencil {
  double inv_2h;   // 1 / (2 a h)
  double inv_h2;   // 1 / (a h)^2
  double inv_2dt;  // 1 / (2 dt)

  Stencil(const Grid1D& grid, const OscillatorConfig& config) {
    const double ah = config.amplitude() * grid.spacing();
    inv_2h = 0.5 / ah;
    inv_h2 = 1.0 / (ah * ah);
    inv_2dt = grid.time_step() ? 0.5 / *grid.time_step() : 0.0;
  }

  template <class V>
  cplx dx(const V& s, std::size_t i) const {
    return (s[i + 1] - s[i - 1]) * inv_2h;
  }
  template <class V>
  cplx dxx(const V& s, std::size_t i) const {
    return (s[i + 1] - 2.0 * s[i] + s[i - 1]) * inv_h2;
  }
};

std::vector<cplx> schrodinger_pointwise(const SampledComplexField& field,
                                        std::span<const double> potential,
                                        const OscillatorConfig& config) {
  const Stencil st(field.grid, config);
  const double hbar = config.hbar();
  const double kinetic = hbar * hbar / (2.0 * config.mass());
  const auto& prev = field.slices[0];
  const auto& mid = field.slices[1];
  const auto& next = field.slices[2];
  std::vector<cplx> r(mid.size(), cplx{});
  for (std::size_t i = 1; i + 1 < mid.size(); ++i) {
    const cplx dt = (next[i] - prev[i]) * st.inv_2dt;
    r[i] = cplx(0.0, hbar) * dt + kinetic * st.dxx(mid, i) - potential[i] * mid[i];
  }
  return r;
}

std::vector<cplx> hj_pointwise(const SampledAction& action, std::span<const double> potential,
                               cplx nu, const OscillatorConfig& config) {
  const Stencil st(action.grid, config);
  const double inv_2m = 0.5 / config.mass();
  const auto& prev = action.slices[0];
  const auto& mid = action.slices[1];
  const auto& next = action.slices[2];
  std::vector<cplx> r(mid.size(), cplx{});
  for (std::size_t i = 1; i + 1 < mid.size(); ++i) {
    const cplx st_t = (next[i] - prev[i]) * st.inv_2dt;
    const cplx sx = st.dx(mid, i);
    r[i] = st_t + sx * sx * inv_2m + potential[i] - nu * st.dxx(mid, i);
  }
  return r;
}

// Interior node whose whole stencil avoids flagged nodes.
bool stencil_valid(const std::vector<bool>& valid, std::size_t i) {
  return valid[i - 1] && valid[i] && valid[i + 1];
}

}  // namespace

ResidualReport with_convergence_order(const ResidualReport& coarse, const ResidualReport& fine) {
  ResidualReport out = fine;
  if (coarse.max_abs > 0.0 && fine.max_abs > 0.0 && coarse.h > fine.h) {
    out.order_estimate = std::log(coarse.max_abs / fine.max_abs) / std::log(coarse.h / fine.h);
  }
  return out;
}

std::size_t SampledAction::flagged() const {
  return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), false));
}

cplx transform_constant(const OscillatorConfig& config) { return cplx(0.0, -config.hbar()); }

cplx cancellation_viscosity(const OscillatorConfig& config) {
  return -transform_constant(config) / (2.0 * config.mass());
}

SampledAction hj_action_from_wavefunction(const SampledComplexField& field,
                                          const OscillatorConfig& config) {
  field.validate();
  const std::size_t n = field.grid.n_points();
  SampledAction action{field.grid, field.t_start, {}, std::vector<bool>(n, true)};

  for (const auto& slice : field.slices) {
    double peak = 0.0;
    for (const cplx& v : slice) peak = std::max(peak, std::abs(v));
    const double floor = kAmplitudeFloor * peak;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(std::abs(slice[i]) > floor)) action.valid[i] = false;
    }
  }
  const auto first = std::find(action.valid.begin(), action.valid.end(), true);
  if (first == action.valid.end()) throw InputError("field vanishes everywhere; log transform undefined");
  const std::size_t anchor = static_cast<std::size_t>(first - action.valid.begin());

  auto unwrap = [&](const std::vector<cplx>& slice, double anchor_phase) {
    std::vector<double> phase(n, 0.0);
    phase[anchor] = anchor_phase;
    std::size_t last = anchor;
    for (std::size_t i = anchor + 1; i < n; ++i) {
      if (!action.valid[i]) continue;
      const double step = fold_phase(std::arg(slice[i]) - std::arg(slice[last]));
      if (i == last + 1 && std::abs(step) > kMaxPhaseStep) {
        throw InputError("field under-resolved: adjacent-node phase jump exceeds pi/2 at node " +
                         std::to_string(i));
      }
      phase[i] = phase[last] + step;
      last = i;
    }
    return phase;
  };

  const std::size_t ref = centre_slice(field.n_slices());
  const double ref_anchor = std::arg(field.slices[ref][anchor]);
  const cplx a_const = transform_constant(config);

  action.slices.resize(field.n_slices());
  for (std::size_t k = 0; k < field.n_slices(); ++k) {
    const auto& slice = field.slices[k];
    const double jump = fold_phase(std::arg(slice[anchor]) - ref_anchor);
    if (std::abs(jump) > kMaxPhaseStep) {
      throw InputError("field under-resolved in time: phase jump between slices exceeds pi/2");
    }
    const std::vector<double> phase = unwrap(slice, ref_anchor + jump);
    auto& s = action.slices[k];
    s.assign(n, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
      if (action.valid[i]) s[i] = a_const * cplx(std::log(std::abs(slice[i])), phase[i]);
    }
  }
  return action;
}

ResidualReport schrodinger_residual(const SampledComplexField& field,
                                    std::span<const double> potential,
                                    const OscillatorConfig& config) {
  require_three_slices(field);
  require_potential(potential, field.grid);
  const auto r = schrodinger_pointwise(field, potential, config);
  ResidualStats stats;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) stats.add(std::abs(r[i]));
  return stats.report(field.grid.spacing(), *field.grid.time_step(), 0);
}

ResidualReport hj_residual(const SampledAction& action, std::span<const double> potential,
                           cplx nu, const OscillatorConfig& config) {
  if (action.slices.size() != 3 || !action.grid.time_step()) {
    throw InputError("residual evaluation needs exactly three time slices");
  }
  require_potential(potential, action.grid);
  const auto r = hj_pointwise(action, potential, nu, config);
  ResidualStats stats;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (stencil_valid(action.valid, i)) stats.add(std::abs(r[i]));
  }
  return stats.report(action.grid.spacing(), *action.grid.time_step(), action.flagged());
}

TransformIdentityReport transform_identity_residual(const SampledComplexField& field,
                                                    std::span<const double> potential,
                                                    const OscillatorConfig& config,
                                                    std::optional<cplx> nu) {
  require_three_slices(field);
  require_potential(potential, field.grid);
  const cplx viscosity = nu.value_or(cancellation_viscosity(config));
  const SampledAction action = hj_action_from_wavefunction(field, config);
  const auto r_hj = hj_pointwise(action, potential, viscosity, config);
  const auto r_sch = schrodinger_pointwise(field, potential, config);
  const auto& psi = field.slices[1];

  TransformIdentityReport out;
  out.nu = viscosity;
  ResidualStats stats;
  for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
    if (!stencil_valid(action.valid, i)) continue;
    const cplx scaled = psi[i] * r_hj[i];
    out.max_hj_scaled = std::max(out.max_hj_scaled, std::abs(scaled));
    out.max_schrodinger = std::max(out.max_schrodinger, std::abs(r_sch[i]));
    stats.add(std::abs(scaled + r_sch[i]));
  }
  out.identity = stats.report(field.grid.spacing(), *field.grid.time_step(), action.flagged());
  return out;
}

namespace {

// Pointwise pieces of the nonlinear term: n0 + nu * g.
struct NonlinearTerms {
  std::vector<cplx> n0;
  std::vector<cplx> g;
  double scale_sq = 0.0;  // sum |A Psi / (a L)^2|^2, for the degeneracy test
};

NonlinearTerms nonlinear_terms(std::span<const SampledComplexField> fields,
                               const OscillatorConfig& config) {
  NonlinearTerms terms;
  const cplx a_const = transform_constant(config);
  const double inv_2m = 0.5 / config.mass();
  for (const SampledComplexField& field : fields) {
    const SampledAction action = hj_action_from_wavefunction(field, config);
    const std::size_t k = centre_slice(field.n_slices());
    const auto& psi = field.slices[k];
    const auto& s = action.slices[k];
    const Stencil st(field.grid, config);
    const double length = config.amplitude() * (field.grid.xt_max() - field.grid.xt_min());
    for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
      if (!stencil_valid(action.valid, i)) continue;
      const cplx sx = st.dx(s, i);
      terms.n0.push_back(psi[i] * sx * sx * inv_2m);
      terms.g.push_back(a_const * st.dxx(psi, i) - psi[i] * st.dxx(s, i));
      terms.scale_sq += std::norm(a_const * psi[i] / (length * length));
    }
  }
  return terms;
}

}  // namespace

ViscosityEstimate viscosity_fit(std::span<const SampledComplexField> fields,
                                const OscillatorConfig& config) {
  if (fields.size() < 3) throw InputError("viscosity fit needs at least three independent fields");
  const NonlinearTerms terms = nonlinear_terms(fields, config);
  cplx numerator{};
  double denominator = 0.0;
  for (std::size_t j = 0; j < terms.g.size(); ++j) {
    numerator += std::conj(terms.g[j]) * terms.n0[j];
    denominator += std::norm(terms.g[j]);
  }
  if (terms.g.empty() || !(denominator > 1e-24 * terms.scale_sq)) {
    throw NumericError("viscosity fit is ill-conditioned: fields carry no gradient information",
                       denominator);
  }
  ViscosityEstimate est;
  est.nu = -numerator / denominator;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < terms.g.size(); ++j) sum_sq += std::norm(terms.n0[j] + est.nu * terms.g[j]);
  est.residual_at_nu = std::sqrt(sum_sq / static_cast<double>(terms.g.size()));
  return est;
}

double nonlinear_residual(std::span<const SampledComplexField> fields, cplx nu,
                          const OscillatorConfig& config) {
  const NonlinearTerms terms = nonlinear_terms(fields, config);
  if (terms.g.empty()) throw InputError("no valid interior nodes");
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < terms.g.size(); ++j) sum_sq += std::norm(terms.n0[j] + nu * terms.g[j]);
  return std::sqrt(sum_sq / static_cast<double>(terms.g.size()));
}

double delta_epsilon_average(const Grid1D& grid, std::span<const cplx> psi,
                             std::span<const cplx> psi_t, std::span<const cplx> psi_xt,
                             std::span<const double> potential, const OscillatorConfig& config) {
  const std::size_t n = grid.n_points();
  if (psi.size() != n || psi_t.size() != n || psi_xt.size() != n) {
    throw InputError("field and derivative samples must cover every grid node");
  }
  require_potential(potential, grid);
  double norm = 0.0;
  for (const cplx& v : psi) norm += std::norm(v);
  norm *= grid.spacing();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw InputError("delta epsilon average needs a normalized field, norm = " + std::to_string(norm));
  }
  const double hbar = config.hbar();
  const double a = config.amplitude();
  const double kinetic = hbar * hbar / (2.0 * config.mass() * a * a);
  const cplx a_const = transform_constant(config);
  cplx sum{};
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * (a_const * std::conj(psi[i]) * psi_t[i] + kinetic * std::norm(psi_xt[i]) +
                potential[i] * std::norm(psi[i]));
  }
  return -(sum * grid.spacing()).real();
}

double delta_epsilon_average(const SampledComplexField& field, std::span<const double> potential,
                             const OscillatorConfig& config) {
  require_three_slices(field);
  const std::size_t n = field.grid.n_points();
  const auto& prev = field.slices[0];
  const auto& mid = field.slices[1];
  const auto& next = field.slices[2];
  const double inv_2dt = 0.5 / *field.grid.time_step();
  const double inv_2h = 0.5 / field.grid.spacing();
  std::vector<cplx> psi_t(n), psi_xt(n);
  for (std::size_t i = 0; i < n; ++i) {
    psi_t[i] = (next[i] - prev[i]) * inv_2dt;
    if (i == 0) {
      psi_xt[i] = (mid[1] - mid[0]) * (2.0 * inv_2h);
    } else if (i + 1 == n) {
      psi_xt[i] = (mid[n - 1] - mid[n - 2]) * (2.0 * inv_2h);
    } else {
      psi_xt[i] = (mid[i + 1] - mid[i - 1]) * inv_2h;
    }
  }
  return delta_epsilon_average(field.grid, mid, psi_t, psi_xt, potential, config);
}

EnergyGapTerms on_trajectory_energy_gap(const OscillatorConfig& config, double t) {
  const Coordinate on_path{classical_trajectory(config, t), t};
  const LogDerivatives d = coherent_state_log_derivatives(config, on_path);
  const cplx a_const = transform_constant(config);
  const cplx s_t = a_const * d.d_t;
  const cplx s_x = a_const * d.d_xt / config.amplitude();

  EnergyGapTerms terms;
  terms.action_rate = s_t.real();
  terms.kinetic = std::norm(s_x) / (2.0 * config.mass());
  terms.potential = harmonic_potential(config, on_path.xt);
  terms.gap = -(terms.action_rate + terms.kinetic + terms.potential);
  return terms;
}

MasslessDualReport massless_dual_residuals(double omega_wave, const std::array<double, 3>& k,
                                           const OscillatorConfig& config) {
  const double hbar = config.hbar();
  const cplx a_const = transform_constant(config);
  MasslessDualReport out;
  out.energy = hbar * omega_wave;
  double k2 = 0.0;
  double p2 = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    // grad ln S_w = i k
    out.momentum[j] = (a_const * cplx(0.0, k[j])).real();
    out.de_broglie_mismatch = std::max(out.de_broglie_mismatch, std::abs(out.momentum[j] - hbar * k[j]));
    k2 += k[j] * k[j];
    p2 += out.momentum[j] * out.momentum[j];
  }
  out.particle_residual = std::abs(out.energy * out.energy - p2);
  // (S_w)_t = -i omega S_w, grad S_w = i k S_w, |S_w(0, 0)| = 1
  out.wave_residual = std::abs(omega_wave * omega_wave - k2);

  const double knorm = std::sqrt(k2);
  for (int it = -4; it <= 4; ++it) {
    for (int ix = -4; ix <= 4; ++ix) {
      const double t = 0.1 * it;
      std::array<double, 3> x{};
      if (knorm > 0.0) {
        for (std::size_t j = 0; j < 3; ++j) x[j] = 0.1 * ix * k[j] / knorm;
      }
      double kx = 0.0;
      double px = 0.0;
      for (std::size_t j = 0; j < 3; ++j) {
        kx += k[j] * x[j];
        px += out.momentum[j] * x[j];
      }
      const double phase = omega_wave * t - kx;
      if (std::abs(phase) >= std::numbers::pi) continue;
      const cplx s_w = std::exp(cplx(0.0, -phase));
      const cplx s_p = -out.energy * t + px;
      out.action_mismatch = std::max(out.action_mismatch, std::abs(s_p - a_const * std::log(s_w)));
    }
  }
  return out;
}

BandLimitedField::BandLimitedField(double offset, std::vector<Mode> modes)
    : offset_(offset), modes_(std::move(modes)) {
  double total = 0.0;
  for (const Mode& m : modes_) total += std::abs(m.amplitude);
  if (modes_.size() > 8) throw InputError("band-limited field supports at most 8 modes");
  if (!(offset_ >= 2.0 * total)) {
    throw InputError("band-limited field offset must be at least twice the summed mode amplitudes");
  }
}

BandLimitedField BandLimitedField::random(std::uint64_t seed, std::size_t n_modes,
                                          double max_wavenumber, double max_frequency) {
  if (n_modes == 0 || n_modes > 8) throw InputError("band-limited field needs 1..8 modes");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Mode> modes;
  double total = 0.0;
  for (std::size_t j = 0; j < n_modes; ++j) {
    const double magnitude = 0.2 + 0.8 * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const double k = max_wavenumber * (2.0 * unit(rng) - 1.0);
    const double w = max_frequency * (2.0 * unit(rng) - 1.0);
    modes.push_back(Mode{std::polar(magnitude, angle), k, w});
    total += magnitude;
  }
  return BandLimitedField(2.0 * total + 0.5, std::move(modes));
}

cplx BandLimitedField::operator()(double xt, double t) const {
  cplx v(offset_, 0.0);
  for (const Mode& m : modes_) v += m.amplitude * std::exp(cplx(0.0, m.wavenumber * xt - m.frequency * t));
  return v;
}

}  // namespace oscinfo
