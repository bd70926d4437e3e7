#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spinboson/model.hpp"

namespace spinboson {

enum class Mode { spectrum, deviations, dynamics, rates, jeff };
enum class Scheme { exact18, simple, dsr };
enum class OutputFormat { csv, json };

struct SweepSpec {
  enum class Variable { delta, g, omega };
  Variable variable = Variable::delta;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  bool operator==(const SweepSpec&) const = default;
};

struct TimesSpec {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  bool operator==(const TimesSpec&) const = default;
};

struct ExperimentConfig {
  Mode mode = Mode::spectrum;
  ModelParams params;
  std::optional<SweepSpec> sweep;
  std::vector<Scheme> schemes{Scheme::exact18, Scheme::simple, Scheme::dsr};
  std::optional<TimesSpec> times;
  std::string output;  // empty -> stdout
  OutputFormat format = OutputFormat::csv;
  bool lamb_shift = true;
  int reference_n_fock = 9;  // 9 Fock levels -> dim-18 reference
  int simple_n_fock = 2;     // Fock levels of the "simple" scheme
  bool deviations_percent = true;
  double unit = 1.0;  // global frequency scale applied to all inputs
  double displacement_tol = 1e-12;
  int displacement_max_iter = 200;
  double jeff_alpha = 1.0;
  std::optional<double> jeff_omega;  // Lorentzian peak; defaults to omega0

  void validate() const;  // throws ConfigError

  bool operator==(const ExperimentConfig&) const = default;
};

// Flat key-value config text. JSON with the same keys is accepted as an
// alternative (detected by a leading '{' or a .json filename).
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

// Built-in experiment presets; preset_config returns the config text.
std::vector<std::string> preset_names();
std::string preset_config(const std::string& name);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // Flat key-value block; carries the fully resolved config plus version and
  // any per-run sidecar values, enough to reproduce the table.
  std::vector<std::pair<std::string, std::string>> metadata;
};

ResultTable run_spectrum(const ExperimentConfig& config);
ResultTable run_deviations(const ExperimentConfig& config);
ResultTable run_dynamics(const ExperimentConfig& config);
ResultTable run_rates(const ExperimentConfig& config);
ResultTable run_jeff(const ExperimentConfig& config);
ResultTable run_experiment(const ExperimentConfig& config);

// CSV: '#'-prefixed metadata lines, a header row, comma-separated values
// printed with 17 significant digits. JSON: {metadata, columns, rows}.
void write_csv(const ResultTable& table, std::ostream& out);
void write_json(const ResultTable& table, std::ostream& out);

std::string mode_name(Mode mode);
std::string scheme_name(Scheme scheme);

}  // namespace spinboson
