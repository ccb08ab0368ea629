#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "oscinfo/errors.hpp"
#include "oscinfo/reports.hpp"
#include "oscinfo/table.hpp"
#include "oscinfo/verification.hpp"

namespace oscinfo::cli {

namespace {

const std::set<std::string> kFlagKeys{"bits", "si"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

bool truthy(const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("flag value must be true or false, got '" + value + "'");
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError("bad alpha value '" + item + "'");
    if (!(v > 0.0)) throw InputError("alpha values must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("alpha list is empty");
  return out;
}

bool given(const std::vector<std::string>& args, const std::string& key) {
  const std::string opt = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == opt || a.rfind(opt + "=", 0) == 0; });
}

// Appends config-file entries that the command line did not set.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto entries = read_config_file(path);
  const std::vector<std::string> original = args;
  for (const auto& [key, value] : entries) {
    if (given(original, key)) continue;
    if (kFlagKeys.count(key)) {
      if (truthy(value)) args.push_back("--" + key);
    } else {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

struct Common {
  std::string out = "-";
  std::string format = "csv";
  std::string config;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out,-o", c.out, "output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  sub->add_option("--config", c.config, "flat key = value file; command-line flags take precedence");
}

OutputFormat to_format(const std::string& s) { return s == "svg" ? OutputFormat::svg : OutputFormat::csv; }

std::string num(double v) { return format_number(v); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string flag(bool v) { return v ? "true" : "false"; }

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    if (key.empty() || key == "config") {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": invalid key");
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information and energy densities of the quantum harmonic oscillator coherent state"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  std::function<int()> action;

  auto emit = [&](const Table& table, PlotKind kind, RunConfig rc) {
    if (common.out == "-") {
      out << render(table, to_format(common.format), kind, rc);
    } else {
      write_output(common.out, table, to_format(common.format), kind, rc);
    }
    return static_cast<int>(ExitCode::ok);
  };

  // density
  auto* density = app.add_subcommand("density", "information density against y for several alpha");
  add_common(density, common);
  DensityRequest dreq;
  std::string alphas = "1,2,3,4,5,6,7,8,9,10";
  density->add_option("--alphas", alphas, "comma-separated alpha = a/de Broglie length")->capture_default_str();
  density->add_option("--t", dreq.t, "time (units 1/omega)")->capture_default_str();
  density->add_option("--y-min", dreq.y_min)->capture_default_str();
  density->add_option("--y-max", dreq.y_max)->capture_default_str();
  density->add_option("--n", dreq.n_points, "grid points")->capture_default_str();
  density->add_flag("--bits", dreq.bits, "report bits instead of nats");
  density->callback([&] {
    action = [&] {
      dreq.alphas = parse_alpha_list(alphas);
      RunConfig rc{"density", {{"alphas", alphas}, {"t", num(dreq.t)}, {"y-min", num(dreq.y_min)},
                               {"y-max", num(dreq.y_max)}, {"n", num(dreq.n_points)}, {"bits", flag(dreq.bits)}}};
      return emit(density_table(dreq), PlotKind::line, rc);
    };
  });

  // surface
  auto* surface = app.add_subcommand("surface", "information density over (xt, t)");
  add_common(surface, common);
  SurfaceRequest sreq;
  surface->add_option("--alpha", sreq.alpha)->capture_default_str();
  surface->add_option("--xt-min", sreq.xt_min)->capture_default_str();
  surface->add_option("--xt-max", sreq.xt_max)->capture_default_str();
  surface->add_option("--nx", sreq.n_points)->capture_default_str();
  surface->add_option("--t-min", sreq.t_min)->capture_default_str();
  surface->add_option("--t-max", sreq.t_max)->capture_default_str();
  surface->add_option("--nt", sreq.n_times)->capture_default_str();
  surface->add_flag("--bits", sreq.bits);
  surface->callback([&] {
    action = [&] {
      RunConfig rc{"surface", {{"alpha", num(sreq.alpha)}, {"xt-min", num(sreq.xt_min)},
                               {"xt-max", num(sreq.xt_max)}, {"nx", num(sreq.n_points)},
                               {"t-min", num(sreq.t_min)}, {"t-max", num(sreq.t_max)},
                               {"nt", num(sreq.n_times)}, {"bits", flag(sreq.bits)}}};
      return emit(surface_table(sreq), PlotKind::heatmap, rc);
    };
  });

  // number
  auto* number = app.add_subcommand("number", "number-state information against <n>");
  add_common(number, common);
  NumberRequest nreq;
  number->add_option("--mean-min", nreq.mean_min)->capture_default_str();
  number->add_option("--mean-max", nreq.mean_max)->capture_default_str();
  number->add_option("--n", nreq.n_points)->capture_default_str();
  number->add_option("--tol", nreq.tol, "Poisson series truncation tolerance")->capture_default_str();
  number->add_flag("--bits", nreq.bits);
  number->callback([&] {
    action = [&] {
      RunConfig rc{"number", {{"mean-min", num(nreq.mean_min)}, {"mean-max", num(nreq.mean_max)},
                              {"n", num(nreq.n_points)}, {"tol", num(nreq.tol)}, {"bits", flag(nreq.bits)}}};
      return emit(number_table(nreq), PlotKind::line, rc);
    };
  });

  // energy
  auto* energy = app.add_subcommand("energy", "energy per unit information over (xt, t)");
  add_common(energy, common);
  EnergyRequest ereq;
  energy->add_option("--alpha", ereq.alpha)->capture_default_str();
  energy->add_option("--xt-min", ereq.xt_min)->capture_default_str();
  energy->add_option("--xt-max", ereq.xt_max)->capture_default_str();
  energy->add_option("--nx", ereq.n_points)->capture_default_str();
  energy->add_option("--t-min", ereq.t_min)->capture_default_str();
  energy->add_option("--t-max", ereq.t_max)->capture_default_str();
  energy->add_option("--nt", ereq.n_times)->capture_default_str();
  energy->add_flag("--si", ereq.si, "physical parameters from --m --omega --a --hbar; output in energy units");
  energy->add_option("--m", ereq.mass)->capture_default_str();
  energy->add_option("--omega", ereq.omega)->capture_default_str();
  energy->add_option("--a", ereq.amplitude)->capture_default_str();
  energy->add_option("--hbar", ereq.hbar)->capture_default_str();
  energy->callback([&] {
    action = [&] {
      RunConfig rc{"energy", {{"xt-min", num(ereq.xt_min)}, {"xt-max", num(ereq.xt_max)},
                              {"nx", num(ereq.n_points)}, {"t-min", num(ereq.t_min)},
                              {"t-max", num(ereq.t_max)}, {"nt", num(ereq.n_times)}, {"si", flag(ereq.si)}}};
      if (ereq.si) {
        rc.params["m"] = num(ereq.mass);
        rc.params["omega"] = num(ereq.omega);
        rc.params["a"] = num(ereq.amplitude);
        rc.params["hbar"] = num(ereq.hbar);
      } else {
        rc.params["alpha"] = num(ereq.alpha);
      }
      return emit(energy_table(ereq), PlotKind::heatmap, rc);
    };
  });

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Crank-Nicolson evolution of the coherent state");
  add_common(evolve, common);
  EvolveRequest vreq;
  evolve->add_option("--alpha", vreq.alpha)->capture_default_str();
  evolve->add_option("--periods", vreq.periods)->capture_default_str();
  evolve->add_option("--nx", vreq.n_points)->capture_default_str();
  evolve->add_option("--dt", vreq.dt, "time step (units 1/omega)")->capture_default_str();
  evolve->add_option("--record-every", vreq.record_every)->capture_default_str();
  evolve->callback([&] {
    action = [&] {
      RunConfig rc{"evolve", {{"alpha", num(vreq.alpha)}, {"periods", num(vreq.periods)},
                              {"nx", num(vreq.n_points)}, {"dt", num(vreq.dt)},
                              {"record-every", num(vreq.record_every)}}};
      return emit(evolve_table(vreq), PlotKind::line, rc);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  std::string verify_config;
  VerifyOptions vopts;
  verify->add_option("--config", verify_config);
  verify->add_option("--tol", vopts.series_tol, "Poisson series truncation tolerance")->capture_default_str();
  verify->add_option("--perturb-nu", vopts.nu_perturbation,
                     "relative perturbation of the cancellation viscosity (negative control)")
      ->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const auto results = run_verification_suite(vopts);
      print_report(out, results);
      return static_cast<int>(all_passed(results) ? ExitCode::ok : ExitCode::verify_failed);
    };
  });

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::io;
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << "\n";
    return ExitCode::usage;
  }

  try {
    return action ? action() : static_cast<int>(ExitCode::usage);
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return ExitCode::io;
  } catch (const NumericError& e) {
    err << "numerical error: " << e.what() << "\n";
    return ExitCode::numeric;
  }
}

}  // namespace oscinfo::cli
