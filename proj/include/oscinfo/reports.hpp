#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscinfo/table.hpp"

namespace oscinfo {

enum class OutputFormat { csv, svg };

/// Effective parameters of one CLI run, echoed as the leading '#' line of
/// every CSV so outputs are self-describing.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;

  /// "oscinfo <command> key=value ..." with keys in sorted order.
  std::string echo() const;
};

/// Information density against y = xt - cos(omega t), one column per alpha.
struct DensityRequest {
  std::vector<double> alphas;
  double t = 0.0;
  double y_min = -4.0;
  double y_max = 4.0;
  std::size_t n_points = 801;
  bool bits = false;
};

/// Information density over (xt, t) for one alpha.
struct SurfaceRequest {
  double alpha = 1.0;
  double xt_min = -3.0;
  double xt_max = 3.0;
  std::size_t n_points = 121;
  double t_min = 0.0;
  double t_max = 6.283185307179586;
  std::size_t n_times = 61;
  bool bits = false;
};

/// Number-state information and its derivative over a range of <n>.
struct NumberRequest {
  double mean_min = 0.01;
  double mean_max = 50.0;
  std::size_t n_points = 500;
  double tol = 1e-13;
  bool bits = false;
};

/// Energy per information over (xt, t). With si set, values are dE/dI in
/// energy units (multiplied by hbar omega) for the given physical parameters.
struct EnergyRequest {
  double alpha = 20.0;
  double xt_min = -3.0;
  double xt_max = 3.0;
  std::size_t n_points = 121;
  double t_min = 0.0;
  double t_max = 6.283185307179586;
  std::size_t n_times = 61;
  bool si = false;
  double mass = 1.0;
  double omega = 1.0;
  double amplitude = 1.0;
  double hbar = 1.0;
};

/// Crank-Nicolson run of the coherent state on [-1 - 8/alpha, 1 + 8/alpha].
struct EvolveRequest {
  double alpha = 5.0;
  double periods = 1.0;
  std::size_t n_points = 2048;
  double dt = 1e-3;
  std::size_t record_every = 10;
};

/// Columns: y, alpha_<a> ...
Table density_table(const DensityRequest& req);
/// Columns: xt, t, density
Table surface_table(const SurfaceRequest& req);
/// Columns: mean, information, derivative
Table number_table(const NumberRequest& req);
/// Columns: xt, t, ratio (or dE_dI with si)
Table energy_table(const EnergyRequest& req);
/// Columns: t, norm, mean_xt, overlap
Table evolve_table(const EvolveRequest& req);

enum class PlotKind { line, heatmap };

/// Renders to a string; CSV output carries config.echo() as its comment line.
std::string render(const Table& table, OutputFormat format, PlotKind kind, const RunConfig& config);

/// Writes render(...) to path, or to stdout when path is "-". Throws IoError
/// naming the path when it cannot be written.
void write_output(const std::string& path, const Table& table, OutputFormat format, PlotKind kind,
                  const RunConfig& config);

}  // namespace oscinfo
