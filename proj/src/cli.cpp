#include "gravcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "gravcat/oracle.hpp"
#include "gravcat/thermal_state.hpp"

namespace gravcat::cli {
namespace {

const std::map<std::string, Command> kCommands{
    {"state", Command::State},         {"sweep", Command::Sweep},
    {"threshold", Command::Threshold}, {"coherence-max", Command::CoherenceMax},
    {"figure", Command::Figure},       {"params", Command::Params},
};

const std::vector<std::string> kFigureIds{"2", "3", "4", "5", "6", "7", "8", "9a", "9b"};

constexpr double kOracleTol = 1e-10;

// Default grids: natural units for the abstract figures, Kelvin for the
// physical-regime ones.
constexpr double kNaturalTMin = 1e-2;
constexpr double kNaturalTMax = 1e2;
constexpr double kPhysicalTMin = 1e-5;
constexpr double kPhysicalTMax = 1e2;
constexpr int kFigurePoints = 400;

// Marletto-type and Krisnanda-type setups, energies as E/k_B in Kelvin.
constexpr double kLabW = 0.015;
constexpr double kLabDeltaWeak = 0.5101e-6;
constexpr double kLabDeltaStrong = 17.0072;

Curve curve(double w, double delta, UnitMode units = UnitMode::Natural) {
  return {"w" + format_double(w) + "_delta" + format_double(delta), ModelParams(w, delta, units)};
}

FigurePreset natural_preset(std::string id, std::vector<Curve> curves) {
  return {std::move(id), std::move(curves), kNaturalTMin, kNaturalTMax, kFigurePoints,
          Spacing::Log};
}

void print_kv(std::ostream& out, const std::string& key, double value) {
  out << key << " = " << format_double(value) << '\n';
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, end);
}

void write_csv(std::ostream& out, const std::vector<CorrelationReport>& rows) {
  out << kCsvHeader << '\n';
  for (const CorrelationReport& r : rows) {
    out << format_double(r.temperature) << ',' << format_double(r.concurrence) << ','
        << format_double(r.l1_norm) << ',' << format_double(r.g1) << ',' << format_double(r.g2)
        << ',' << to_string(r.branch) << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<CorrelationReport>& rows) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    write_csv(file, rows);
    file.flush();
    if (!file) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path);
  }
}

void oracle_verify(const ModelParams& params, const std::vector<CorrelationReport>& rows) {
  const oracle::Matrix4 h = oracle::build_hamiltonian(params);
  for (const CorrelationReport& row : rows) {
    const ThermalState closed = thermal_state(params, row.temperature);
    const oracle::Matrix4 dense = oracle::gibbs_state(h, std::max(row.temperature, kTemperatureFloor));
    const double element_err = (dense - oracle::to_matrix(closed)).max_abs();
    const double c_err = std::abs(oracle::wootters_concurrence(dense) - row.concurrence);
    const double l1_err = std::abs(oracle::l1_norm(dense) - row.l1_norm);
    const double worst = std::max({element_err, c_err, l1_err});
    if (!(worst <= kOracleTol)) {
      throw OracleMismatch("oracle mismatch at T=" + format_double(row.temperature) +
                           ": deviation " + format_double(worst));
    }
  }
}

FigurePreset figure_preset(const std::string& id, const std::vector<double>& deltas) {
  if (id == "2") {
    return natural_preset(id, {curve(0.1, 0.01), curve(1.0, 0.3), curve(2.0, 1.2),
                               curve(3.0, 3.0)});
  }
  if (id == "3") {
    const std::vector<double> ws{0.01, 0.1, 1.0};
    if (deltas.size() != ws.size()) {
      throw ConfigError("figure 3 needs --deltas with 3 values, one per w in {0.01, 0.1, 1.0}");
    }
    std::vector<Curve> curves;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (!(deltas[i] > ws[i])) {
        throw ConfigError("figure 3 needs delta > w, got delta=" + format_double(deltas[i]) +
                          " for w=" + format_double(ws[i]));
      }
      curves.push_back(curve(ws[i], deltas[i]));
    }
    return natural_preset(id, std::move(curves));
  }
  if (id == "4") return natural_preset(id, {curve(1.0, 0.01), curve(1.0, 0.1), curve(1.0, 0.2)});
  if (id == "5") return natural_preset(id, {curve(1.0, 0.2)});
  if (id == "6") {
    return natural_preset(id, {curve(0.05, 0.05), curve(0.1, 0.1), curve(0.5, 0.5)});
  }
  if (id == "7") {
    return natural_preset(id, {curve(3.0, 100.0), curve(3.0, 300.0), curve(3.0, 600.0)});
  }
  if (id == "8") {
    return {id, {curve(kLabW, kLabDeltaWeak, UnitMode::Physical)}, kPhysicalTMin, kPhysicalTMax,
            kFigurePoints, Spacing::Log};
  }
  if (id == "9a") {
    return {id, {curve(kLabW, kLabDeltaStrong, UnitMode::Physical)}, kPhysicalTMin,
            kPhysicalTMax, kFigurePoints, Spacing::Log};
  }
  if (id == "9b") {
    // Linear zoom around the threshold region.
    return {id, {curve(kLabW, kLabDeltaStrong, UnitMode::Physical)}, 0.01, 10.0,
            kFigurePoints, Spacing::Linear};
  }
  throw ConfigError("unknown figure id '" + id + "' (expected 2, 3, 4, 5, 6, 7, 8, 9a or 9b)");
}

ModelParams model_params(const RunConfig& c) {
  if (c.physical) {
    if (c.w || c.delta) throw ConfigError("give either w/delta or a physical block, not both");
    try {
      return params_from_physical(*c.physical);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (!c.w || !c.delta) throw ConfigError("missing model parameters: need --w and --delta");
  try {
    return ModelParams(*c.w, *c.delta, c.units);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Thermal entanglement and coherence of two gravitationally coupled cat states",
               "gravcat"};
  app.set_config("--config", "", "Flat `key = value` file; flags override it");

  RunConfig cfg;
  std::string command;
  std::string figure_id;
  app.add_option("command", command, "state | sweep | threshold | coherence-max | figure | params")
      ->required();
  app.add_option("figure_id", figure_id, "Figure id for `figure`");

  double w = 0.0;
  double delta = 0.0;
  std::string units = "natural";
  auto* w_opt = app.add_option("--w", w, "Energy gap w (E/k_B in K for physical units)");
  auto* delta_opt = app.add_option("--delta", delta, "Gravitational coupling delta");
  app.add_option("--units", units, "natural | physical")
      ->check(CLI::IsMember({"natural", "physical"}));

  PhysicalSetup setup;
  std::string convention = "full";
  double w_over_kB = 0.0;
  auto* mass_opt = app.add_option("--mass", setup.mass, "Mass of each particle [kg]");
  auto* d_opt = app.add_option("--d", setup.d, "Separation in matching minima [m]");
  auto* l_opt = app.add_option("--L", setup.L, "Distance between well minima [m]");
  app.add_option("--G", setup.G, "Gravitational constant")->capture_default_str();
  app.add_option("--kB", setup.k_B, "Boltzmann constant [J/K]")->capture_default_str();
  auto* wkb_opt = app.add_option("--w_over_kB", w_over_kB, "w/k_B [K] for the physical block");
  app.add_option("--convention", convention, "Delta prefactor: full (alpha) | half (alpha/2)")
      ->check(CLI::IsMember({"full", "half"}));

  double t_min = 0.0;
  double t_max = 0.0;
  int n_points = 0;
  std::string spacing;
  app.add_option("--T", cfg.temperature, "Temperature for `state`");
  auto* tmin_opt = app.add_option("--t_min", t_min, "Lowest sweep temperature");
  auto* tmax_opt = app.add_option("--t_max", t_max, "Highest sweep temperature");
  auto* n_opt = app.add_option("--n", n_points, "Number of sweep points");
  auto* spacing_opt =
      app.add_option("--spacing", spacing, "log | linear")->check(CLI::IsMember({"log", "linear"}));
  app.add_option("--rel_tol", cfg.rel_tol, "Relative bracket width for `threshold`");
  app.add_option("--out", cfg.output, "CSV file (sweep) or directory (figure)");
  app.add_flag("--oracle", cfg.oracle_check, "Cross-check every row against the dense oracle");
  app.add_option("--deltas", cfg.deltas, "Per-curve delta values (figure 3)")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  const auto it = kCommands.find(command);
  if (it == kCommands.end()) throw ConfigError("unknown command '" + command + "'");
  cfg.command = it->second;
  if (cfg.command == Command::Figure) {
    if (figure_id.empty()) throw ConfigError("figure needs an id");
    if (std::find(kFigureIds.begin(), kFigureIds.end(), figure_id) == kFigureIds.end()) {
      throw ConfigError("unknown figure id '" + figure_id + "'");
    }
    cfg.figure_id = figure_id;
  } else if (!figure_id.empty()) {
    throw ConfigError("unexpected argument '" + figure_id + "'");
  }

  if (w_opt->count() > 0) cfg.w = w;
  if (delta_opt->count() > 0) cfg.delta = delta;
  cfg.units = units == "physical" ? UnitMode::Physical : UnitMode::Natural;

  const bool any_physical = mass_opt->count() + d_opt->count() + l_opt->count() +
                                wkb_opt->count() > 0;
  if (any_physical) {
    if (mass_opt->count() == 0 || d_opt->count() == 0 || l_opt->count() == 0) {
      throw ConfigError("physical block needs --mass, --d and --L");
    }
    if (wkb_opt->count() == 0) throw ConfigError("physical block needs --w_over_kB");
    setup.w_over_kB = w_over_kB;
    setup.convention = convention == "half" ? DeltaConvention::Half : DeltaConvention::Full;
    cfg.physical = setup;
  }

  if (tmin_opt->count() > 0) cfg.t_min = t_min;
  if (tmax_opt->count() > 0) cfg.t_max = t_max;
  if (n_opt->count() > 0) cfg.n_points = n_points;
  if (spacing_opt->count() > 0) cfg.spacing = spacing == "linear" ? Spacing::Linear : Spacing::Log;
  return cfg;
}

namespace {

SweepSpec sweep_spec(const RunConfig& c, const ModelParams& params) {
  if (!c.t_min || !c.t_max) throw ConfigError("sweep needs --t_min and --t_max");
  SweepSpec spec{params, *c.t_min, *c.t_max, c.n_points.value_or(kFigurePoints),
                 c.spacing.value_or(Spacing::Log)};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

void run_state(const RunConfig& c, std::ostream& out) {
  const ModelParams params = model_params(c);
  ThermalState s;
  try {
    s = thermal_state(params, c.temperature);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const Concurrence conc = concurrence_x(s);
  const L1Coherence coh = l1_coherence(s);
  if (c.oracle_check) {
    oracle_verify(params, {{c.temperature, conc.value, coh.l1, coh.g1, coh.g2, conc.branch}});
  }
  print_kv(out, "T", s.temperature);
  print_kv(out, "rho11", s.rho11);
  print_kv(out, "rho14", s.rho14);
  print_kv(out, "rho22", s.rho22);
  print_kv(out, "rho23", s.rho23);
  print_kv(out, "rho44", s.rho44);
  print_kv(out, "Z", s.z);
  print_kv(out, "log_Z", s.log_z);
  print_kv(out, "concurrence", conc.value);
  print_kv(out, "l1_norm", coh.l1);
  print_kv(out, "g1", coh.g1);
  print_kv(out, "g2", coh.g2);
  out << "branch = " << to_string(conc.branch) << '\n';
  if (s.degenerate_ground) out << "warning = degenerate ground level, equal mixture returned\n";
}

void run_sweep(const RunConfig& c, std::ostream& out) {
  const ModelParams params = model_params(c);
  const SweepSpec spec = sweep_spec(c, params);
  const std::vector<CorrelationReport> rows = sweep(spec);
  if (c.oracle_check) oracle_verify(params, rows);
  if (c.output.empty()) {
    write_csv(out, rows);
  } else {
    write_csv_file(c.output, rows);
    out << c.output << '\n';
  }
}

void run_threshold(const RunConfig& c, std::ostream& out) {
  const ModelParams params = model_params(c);
  ThresholdResult r;
  try {
    r = threshold_temperature(params, c.rel_tol);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  out << "status = " << to_string(r.status) << '\n';
  if (r.status == ThresholdStatus::Found) {
    print_kv(out, "T_th", r.t_th);
    print_kv(out, "t_lo", r.t_lo);
    print_kv(out, "t_hi", r.t_hi);
    out << "iterations = " << r.iterations << '\n';
  }
}

void run_coherence_max(const RunConfig& c, std::ostream& out) {
  const CoherenceMaximum m = coherence_maximum(model_params(c));
  out << "status = " << to_string(m.status) << '\n';
  print_kv(out, "t_star", m.t_star);
  print_kv(out, "l1_max", m.l1_max);
}

void run_params(const RunConfig& c, std::ostream& out) {
  const ModelParams p = model_params(c);
  print_kv(out, "w", p.w());
  print_kv(out, "delta", p.delta());
  out << "units = " << to_string(p.unit_mode()) << '\n';
  if (c.physical) {
    out << "convention = " << to_string(c.physical->convention) << '\n';
    print_kv(out, "alpha", c.physical->alpha());
    print_kv(out, "d_far", c.physical->far_separation());
  }
}

void run_figure(const RunConfig& c, std::ostream& out) {
  namespace fs = std::filesystem;
  FigurePreset preset = figure_preset(c.figure_id, c.deltas);
  if (c.t_min) preset.t_min = *c.t_min;
  if (c.t_max) preset.t_max = *c.t_max;
  if (c.n_points) preset.n_points = *c.n_points;
  if (c.spacing) preset.spacing = *c.spacing;

  const fs::path dir = c.output.empty() ? fs::path(".") : fs::path(c.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());

  // Compute and validate every curve before writing anything.
  std::vector<std::vector<CorrelationReport>> tables;
  for (const Curve& cv : preset.curves) {
    SweepSpec spec{cv.params, preset.t_min, preset.t_max, preset.n_points, preset.spacing};
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    tables.push_back(sweep(spec));
    if (c.oracle_check) oracle_verify(cv.params, tables.back());
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const fs::path path = dir / ("fig" + preset.id + "_" + preset.curves[i].label + ".csv");
    write_csv_file(path.string(), tables[i]);
    out << path.string() << '\n';
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::State:
        run_state(config, out);
        break;
      case Command::Sweep:
        run_sweep(config, out);
        break;
      case Command::Threshold:
        run_threshold(config, out);
        break;
      case Command::CoherenceMax:
        run_coherence_max(config, out);
        break;
      case Command::Figure:
        run_figure(config, out);
        break;
      case Command::Params:
        run_params(config, out);
        break;
    }
  } catch (const OracleMismatch& e) {
    err << "gravcat: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "gravcat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const ConfigError& e) {
    err << "gravcat: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace gravcat::cli
