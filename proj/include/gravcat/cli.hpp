#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gravcat/analysis.hpp"
#include "gravcat/correlations.hpp"
#include "gravcat/model.hpp"

namespace gravcat::cli {

enum class Command { State, Sweep, Threshold, CoherenceMax, Figure, Params };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Invalid or incomplete configuration (exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row disagreed with the brute-force oracle (exit status 2).
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::State;
  std::string figure_id;

  // Model block: abstract (w, delta) ...
  std::optional<double> w;
  std::optional<double> delta;
  UnitMode units = UnitMode::Natural;
  // ... or a physical block, which always yields UnitMode::Physical.
  std::optional<PhysicalSetup> physical;

  double temperature = 0.0;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<int> n_points;
  std::optional<Spacing> spacing;
  double rel_tol = 1e-10;

  /// CSV path for `sweep` (stdout when empty), output directory for `figure`.
  std::string output;
  bool oracle_check = false;
  /// Per-curve delta values for presets that leave them open (figure 3).
  std::vector<double> deltas;
};

/// Parses `gravcat <command> [figure-id] [--key value ...] [--config file]`.
/// Config files hold one `key = value` per line with `#` comments; keys are
/// the flag names and command-line flags take precedence.
/// Throws ConfigError on any usage problem. Returns std::nullopt when help was
/// requested and already printed to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Resolves the model block into parameters. Throws ConfigError if neither or
/// both blocks are present, or if the physical block lacks w_over_kB.
ModelParams model_params(const RunConfig& config);

struct Curve {
  std::string label;
  ModelParams params;
};

struct FigurePreset {
  std::string id;
  std::vector<Curve> curves;
  double t_min;
  double t_max;
  int n_points;
  Spacing spacing;
};

/// Preset sweeps behind each figure. `deltas` is only consulted for figure 3,
/// which needs one delta > w for each of w = 0.01, 0.1, 1.0.
/// Throws ConfigError for unknown ids or unsatisfiable presets.
FigurePreset figure_preset(const std::string& id, const std::vector<double>& deltas);

/// Shortest decimal representation that round-trips the double.
std::string format_double(double x);

inline constexpr const char* kCsvHeader = "T,concurrence,l1_norm,g1,g2,branch";

void write_csv(std::ostream& out, const std::vector<CorrelationReport>& rows);

/// Writes to `path` through a temporary file and a rename.
/// Throws std::runtime_error if the file cannot be written.
void write_csv_file(const std::string& path, const std::vector<CorrelationReport>& rows);

/// Recomputes each row with the dense Gibbs state and generic Wootters
/// concurrence. Throws OracleMismatch when any element or measure differs by
/// more than 1e-10.
void oracle_verify(const ModelParams& params, const std::vector<CorrelationReport>& rows);

/// Executes a parsed configuration. Returns the process exit status and
/// prints a one-line diagnostic to `err` on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gravcat::cli
