#include "oscinfo/reports.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "oscinfo/energy_info.hpp"
#include "oscinfo/errors.hpp"
#include "oscinfo/evolution.hpp"
#include "oscinfo/number_info.hpp"
#include "oscinfo/spatial_info.hpp"

namespace oscinfo {

namespace {

double linspace(double lo, double hi, std::size_t n, std::size_t i) {
  if (n == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

void require_points(std::size_t n, const char* what) {
  if (n < 3) throw InputError(std::string(what) + " needs at least 3 points");
}

void require_range(double lo, double hi, const char* what) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InputError(std::string(what) + " range must satisfy min < max");
  }
}

void require_times(double lo, double hi, std::size_t n) {
  if (n == 0) throw InputError("need at least one time");
  if (n > 1) require_range(lo, hi, "time");
}

}  // namespace

std::string RunConfig::echo() const {
  std::string out = "oscinfo " + command;
  for (const auto& [key, value] : params) out += " " + key + "=" + value;
  return out;
}

Table density_table(const DensityRequest& req) {
  if (req.alphas.empty()) throw InputError("density needs at least one alpha");
  require_points(req.n_points, "density grid");
  require_range(req.y_min, req.y_max, "y");
  const double scale = req.bits ? 1.0 / std::numbers::ln2 : 1.0;

  std::vector<OscillatorConfig> configs;
  Table table;
  table.columns.push_back("y");
  for (double a : req.alphas) {
    configs.push_back(OscillatorConfig::with_alpha(a));
    table.columns.push_back("alpha_" + format_number(a));
  }
  for (std::size_t i = 0; i < req.n_points; ++i) {
    const double y = linspace(req.y_min, req.y_max, req.n_points, i);
    std::vector<double> row{y};
    for (const auto& c : configs) {
      const Coordinate coord{y + classical_trajectory(c, req.t), req.t};
      row.push_back(scale * info_density(c, coord));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table surface_table(const SurfaceRequest& req) {
  const OscillatorConfig config = OscillatorConfig::with_alpha(req.alpha);
  const Grid1D grid(req.xt_min, req.xt_max, req.n_points);
  require_times(req.t_min, req.t_max, req.n_times);
  const double scale = req.bits ? 1.0 / std::numbers::ln2 : 1.0;
  Table table;
  table.columns = {"xt", "t", "density"};
  for (std::size_t k = 0; k < req.n_times; ++k) {
    const double t = linspace(req.t_min, req.t_max, req.n_times, k);
    const InfoDensityCurve curve = density_curve(config, t, grid);
    for (std::size_t i = 0; i < curve.xt.size(); ++i) {
      table.rows.push_back({curve.xt[i], t, scale * curve.density[i]});
    }
  }
  return table;
}

Table number_table(const NumberRequest& req) {
  if (!(req.mean_min > 0.0)) {
    throw InputError("mean range must start above 0 (the information density diverges at <n> = 0)");
  }
  require_range(req.mean_min, req.mean_max, "mean");
  require_points(req.n_points, "mean grid");
  const double scale = req.bits ? 1.0 / std::numbers::ln2 : 1.0;
  Table table;
  table.columns = {"mean", "information", "derivative"};
  for (std::size_t i = 0; i < req.n_points; ++i) {
    const double mean = linspace(req.mean_min, req.mean_max, req.n_points, i);
    const NumberStateInfo info = number_information(mean, req.tol);
    table.rows.push_back({mean, scale * info.information, scale * info.derivative});
  }
  return table;
}

Table energy_table(const EnergyRequest& req) {
  const OscillatorConfig config = req.si ? OscillatorConfig(req.mass, req.omega, req.amplitude, req.hbar)
                                         : OscillatorConfig::with_alpha(req.alpha);
  const Grid1D grid(req.xt_min, req.xt_max, req.n_points);
  require_times(req.t_min, req.t_max, req.n_times);
  std::vector<double> times;
  for (std::size_t k = 0; k < req.n_times; ++k) times.push_back(linspace(req.t_min, req.t_max, req.n_times, k));
  const EnergyInfoSurface surface = energy_info_surface(config, grid, times);
  const double scale = req.si ? config.quantum_energy() : 1.0;
  Table table;
  table.columns = {"xt", "t", req.si ? "dE_dI" : "ratio"};
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t i = 0; i < surface.xt.size(); ++i) {
      table.rows.push_back({surface.xt[i], times[k], scale * surface.at(k, i)});
    }
  }
  return table;
}

Table evolve_table(const EvolveRequest& req) {
  if (!(req.periods > 0.0)) throw InputError("periods must be positive");
  if (req.n_points < 3) throw InputError("evolve grid needs at least 3 points");
  const OscillatorConfig config = OscillatorConfig::with_alpha(req.alpha);
  const double margin = 8.0 / req.alpha;
  const Grid1D grid(-1.0 - margin, 1.0 + margin, req.n_points);
  if (!(req.dt > 0.0)) throw ConfigError("time step must be positive");
  const double period = 2.0 * std::numbers::pi / config.angular_frequency();
  const auto steps = static_cast<std::size_t>(std::ceil(req.periods * period / req.dt - 1e-9));
  const double dt = req.periods * period / static_cast<double>(steps);

  EvolveOptions options;
  options.record_every = req.record_every;
  options.reference = [&config](double xt, double t) { return coherent_state(config, Coordinate{xt, t}); };
  const EvolutionResult result = evolve(sample_coherent_state(config, grid, 0.0),
                                        sample_harmonic_potential(config, grid), dt, steps, config, options);
  Table table;
  table.columns = {"t", "norm", "mean_xt", "overlap"};
  for (const auto& s : result.snapshots) table.rows.push_back({s.t, s.norm, s.mean_xt, s.overlap.value_or(NAN)});
  return table;
}

std::string render(const Table& table, OutputFormat format, PlotKind kind, const RunConfig& config) {
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    write_csv(out, table, {config.echo()});
  } else if (kind == PlotKind::line) {
    write_line_svg(out, table, config.echo());
  } else {
    write_heatmap_svg(out, table, config.echo());
  }
  return out.str();
}

void write_output(const std::string& path, const Table& table, OutputFormat format, PlotKind kind,
                  const RunConfig& config) {
  const std::string text = render(table, format, kind, config);
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace oscinfo
