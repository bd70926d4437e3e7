#include "spinboson/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "spinboson/hamiltonians.hpp"
#include "spinboson/numerics.hpp"
#include "spinboson/redfield.hpp"
#include "spinboson/version.hpp"

namespace spinboson {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for '" + key + "': " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const int x = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer value for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("invalid boolean value for '" + key + "': " + value);
}

Mode parse_mode(const std::string& value) {
  if (value == "spectrum") return Mode::spectrum;
  if (value == "deviations") return Mode::deviations;
  if (value == "dynamics") return Mode::dynamics;
  if (value == "rates") return Mode::rates;
  if (value == "jeff") return Mode::jeff;
  throw ConfigError("unknown mode: " + value);
}

Scheme parse_scheme(const std::string& value) {
  if (value == "exact18") return Scheme::exact18;
  if (value == "simple") return Scheme::simple;
  if (value == "dsr") return Scheme::dsr;
  throw ConfigError("unknown scheme: " + value);
}

SweepSpec::Variable parse_sweep_variable(const std::string& value) {
  if (value == "delta") return SweepSpec::Variable::delta;
  if (value == "g") return SweepSpec::Variable::g;
  if (value == "omega") return SweepSpec::Variable::omega;
  throw ConfigError("unknown sweep variable: " + value);
}

std::string sweep_variable_name(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::delta: return "delta";
    case SweepSpec::Variable::g: return "g";
    case SweepSpec::Variable::omega: return "omega";
  }
  return "delta";
}

void apply_key(ExperimentConfig& c, const std::string& key,
               const std::string& value) {
  if (key == "mode") c.mode = parse_mode(value);
  else if (key == "delta") c.params.delta = parse_double(key, value);
  else if (key == "omega0") c.params.omega0 = parse_double(key, value);
  else if (key == "g_re") c.params.g.real(parse_double(key, value));
  else if (key == "g_im") c.params.g.imag(parse_double(key, value));
  else if (key == "kappa") c.params.kappa = parse_double(key, value);
  else if (key == "omega_c") c.params.omega_c = parse_double(key, value);
  else if (key == "temperature") c.params.temperature = parse_double(key, value);
  else if (key == "unit") c.unit = parse_double(key, value);
  else if (key == "sweep_variable") {
    if (!c.sweep) c.sweep.emplace();
    c.sweep->variable = parse_sweep_variable(value);
  } else if (key == "sweep_start") {
    if (!c.sweep) c.sweep.emplace();
    c.sweep->start = parse_double(key, value);
  } else if (key == "sweep_stop") {
    if (!c.sweep) c.sweep.emplace();
    c.sweep->stop = parse_double(key, value);
  } else if (key == "sweep_steps") {
    if (!c.sweep) c.sweep.emplace();
    c.sweep->steps = parse_int(key, value);
  } else if (key == "schemes") {
    c.schemes.clear();
    for (const auto& tok : split(value, ','))
      if (!tok.empty()) c.schemes.push_back(parse_scheme(tok));
  } else if (key == "times_start") {
    if (!c.times) c.times.emplace();
    c.times->start = parse_double(key, value);
  } else if (key == "times_stop") {
    if (!c.times) c.times.emplace();
    c.times->stop = parse_double(key, value);
  } else if (key == "times_steps") {
    if (!c.times) c.times.emplace();
    c.times->steps = parse_int(key, value);
  } else if (key == "output") {
    c.output = value;
  } else if (key == "format") {
    if (value == "csv") c.format = OutputFormat::csv;
    else if (value == "json") c.format = OutputFormat::json;
    else throw ConfigError("unknown format: " + value);
  } else if (key == "lamb_shift") {
    c.lamb_shift = parse_bool(key, value);
  } else if (key == "reference_n_fock") {
    c.reference_n_fock = parse_int(key, value);
  } else if (key == "simple_n_fock") {
    c.simple_n_fock = parse_int(key, value);
  } else if (key == "deviations_percent") {
    c.deviations_percent = parse_bool(key, value);
  } else if (key == "displacement_tol") {
    c.displacement_tol = parse_double(key, value);
  } else if (key == "displacement_max_iter") {
    c.displacement_max_iter = parse_int(key, value);
  } else if (key == "jeff_alpha") {
    c.jeff_alpha = parse_double(key, value);
  } else if (key == "jeff_omega") {
    c.jeff_omega = parse_double(key, value);
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

void apply_flat_text(ExperimentConfig& c, const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is not 'key = value': " + line);
    apply_key(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_json_text(ExperimentConfig& c, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("JSON config must be an object");
  for (const auto& [key, value] : j.items()) {
    std::string str;
    if (value.is_string()) str = value.get<std::string>();
    else if (value.is_boolean()) str = value.get<bool>() ? "true" : "false";
    else if (value.is_number_integer()) str = std::to_string(value.get<long long>());
    else if (value.is_number()) str = fmt17(value.get<double>());
    else throw ConfigError("unsupported JSON value for key: " + key);
    apply_key(c, key, str);
  }
}

std::vector<double> linspace(double start, double stop, int steps) {
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  const double h = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[i] = start + i * h;
  out.back() = stop;
  return out;
}

// Config with the global unit folded into every frequency.
ModelParams internal_params(const ExperimentConfig& c) {
  ModelParams p = c.params;
  p.delta *= c.unit;
  p.omega0 *= c.unit;
  p.g *= c.unit;
  p.omega_c *= c.unit;
  p.temperature *= c.unit;
  return p;
}

ModelParams at_sweep_value(const ExperimentConfig& c, const ModelParams& base,
                           double value) {
  ModelParams p = base;
  if (!c.sweep) return p;
  switch (c.sweep->variable) {
    case SweepSpec::Variable::delta:
      p.delta = value;
      break;
    case SweepSpec::Variable::g: {
      const Complex dir =
          p.g == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : p.g / std::abs(p.g);
      p.g = value * dir;
      break;
    }
    case SweepSpec::Variable::omega:
      break;
  }
  return p;
}

Eigen::Vector4d scheme_levels(const ExperimentConfig& c, const ModelParams& p,
                              Scheme scheme) {
  switch (scheme) {
    case Scheme::exact18:
      return eigh(build_exact(p, c.reference_n_fock)).values.head(4);
    case Scheme::simple:
      return eigh(build_exact(p, c.simple_n_fock)).values.head(4);
    case Scheme::dsr: {
      const DsrParams dsr =
          solve_displacement(p, c.displacement_tol, c.displacement_max_iter);
      const DsrEigensystem es = dsr_eigensystem(p, dsr);
      Eigen::Vector4d v;
      v << es.e0, es.e1, es.e2, es.e3;
      std::sort(v.data(), v.data() + 4);
      return v;
    }
  }
  throw ConfigError("unknown scheme");
}

void append_config_metadata(ResultTable& table, const ExperimentConfig& c) {
  table.metadata.emplace_back("version", kVersion);
  std::stringstream ss(serialize_config(c));
  std::string line;
  while (std::getline(ss, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    table.metadata.emplace_back(trim(line.substr(0, eq)),
                                trim(line.substr(eq + 1)));
  }
}

std::vector<double> sweep_values(const ExperimentConfig& c, double fallback) {
  if (!c.sweep) return {fallback};
  return linspace(c.sweep->start, c.sweep->stop, c.sweep->steps);
}

RateOptions rate_options(const ExperimentConfig& c) {
  RateOptions opts;
  opts.lamb_shift = c.lamb_shift;
  return opts;
}

}  // namespace

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::spectrum: return "spectrum";
    case Mode::deviations: return "deviations";
    case Mode::dynamics: return "dynamics";
    case Mode::rates: return "rates";
    case Mode::jeff: return "jeff";
  }
  return "spectrum";
}

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::exact18: return "exact18";
    case Scheme::simple: return "simple";
    case Scheme::dsr: return "dsr";
  }
  return "dsr";
}

void ExperimentConfig::validate() const {
  params.validate();
  if (!(unit > 0.0)) throw ConfigError("unit must be positive");
  if (!(displacement_tol > 0.0)) throw ConfigError("displacement_tol must be positive");
  if (displacement_max_iter < 1) throw ConfigError("displacement_max_iter must be >= 1");
  if (reference_n_fock < 2) throw ConfigError("reference_n_fock must be >= 2");
  if (simple_n_fock < 2) throw ConfigError("simple_n_fock must be >= 2");

  if (sweep) {
    if (sweep->steps < 2) throw ConfigError("sweep_steps must be >= 2");
    if (!(sweep->start < sweep->stop)) throw ConfigError("sweep_start must be < sweep_stop");
    const bool omega_sweep = sweep->variable == SweepSpec::Variable::omega;
    if (mode == Mode::jeff && !omega_sweep)
      throw ConfigError("jeff mode sweeps omega only");
    if (mode != Mode::jeff && omega_sweep)
      throw ConfigError("omega sweeps are only valid in jeff mode");
    if (mode == Mode::dynamics || mode == Mode::rates)
      throw ConfigError("sweep is not supported in " + mode_name(mode) + " mode");
  }
  if (times) {
    if (times->steps < 2) throw ConfigError("times_steps must be >= 2");
    if (!(times->start < times->stop)) throw ConfigError("times_start must be < times_stop");
    if (times->start < 0.0) throw ConfigError("times_start must be >= 0");
  }

  if (mode == Mode::spectrum || mode == Mode::deviations || mode == Mode::dynamics) {
    if (schemes.empty()) throw ConfigError("at least one scheme is required");
  }
  if (mode == Mode::deviations) {
    for (Scheme s : schemes)
      if (s == Scheme::exact18)
        throw ConfigError("exact18 is the deviations reference, not a scheme");
  }
  if (mode == Mode::dynamics && !times)
    throw ConfigError("dynamics mode requires a times grid");

  std::vector<Scheme> sorted = schemes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConfigError("duplicate scheme in config");
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  c.schemes.clear();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    apply_json_text(c, text);
  else
    apply_flat_text(c, text);
  if (c.schemes.empty())
    c.schemes = {Scheme::exact18, Scheme::simple, Scheme::dsr};
  return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "mode = " << mode_name(c.mode) << "\n";
  out << "delta = " << fmt17(c.params.delta) << "\n";
  out << "omega0 = " << fmt17(c.params.omega0) << "\n";
  out << "g_re = " << fmt17(c.params.g.real()) << "\n";
  out << "g_im = " << fmt17(c.params.g.imag()) << "\n";
  out << "kappa = " << fmt17(c.params.kappa) << "\n";
  out << "omega_c = " << fmt17(c.params.omega_c) << "\n";
  out << "temperature = " << fmt17(c.params.temperature) << "\n";
  out << "unit = " << fmt17(c.unit) << "\n";
  if (c.sweep) {
    out << "sweep_variable = " << sweep_variable_name(c.sweep->variable) << "\n";
    out << "sweep_start = " << fmt17(c.sweep->start) << "\n";
    out << "sweep_stop = " << fmt17(c.sweep->stop) << "\n";
    out << "sweep_steps = " << c.sweep->steps << "\n";
  }
  out << "schemes = ";
  for (size_t i = 0; i < c.schemes.size(); ++i) {
    if (i) out << ",";
    out << scheme_name(c.schemes[i]);
  }
  out << "\n";
  if (c.times) {
    out << "times_start = " << fmt17(c.times->start) << "\n";
    out << "times_stop = " << fmt17(c.times->stop) << "\n";
    out << "times_steps = " << c.times->steps << "\n";
  }
  if (!c.output.empty()) out << "output = " << c.output << "\n";
  out << "format = " << (c.format == OutputFormat::csv ? "csv" : "json") << "\n";
  out << "lamb_shift = " << (c.lamb_shift ? "true" : "false") << "\n";
  out << "reference_n_fock = " << c.reference_n_fock << "\n";
  out << "simple_n_fock = " << c.simple_n_fock << "\n";
  out << "deviations_percent = " << (c.deviations_percent ? "true" : "false") << "\n";
  out << "displacement_tol = " << fmt17(c.displacement_tol) << "\n";
  out << "displacement_max_iter = " << c.displacement_max_iter << "\n";
  if (c.mode == Mode::jeff) {
    out << "jeff_alpha = " << fmt17(c.jeff_alpha) << "\n";
    if (c.jeff_omega) out << "jeff_omega = " << fmt17(*c.jeff_omega) << "\n";
  }
  return out.str();
}

ResultTable run_spectrum(const ExperimentConfig& c) {
  c.validate();
  const ModelParams base = internal_params(c);
  ResultTable table;
  const std::string xname =
      c.sweep ? sweep_variable_name(c.sweep->variable) : "delta";
  table.columns.push_back(xname);
  for (Scheme s : c.schemes)
    for (int i = 0; i < 4; ++i)
      table.columns.push_back(scheme_name(s) + "_e" + std::to_string(i));

  for (double x : sweep_values(c, base.delta)) {
    const ModelParams p = at_sweep_value(c, base, x * c.unit);
    std::vector<double> row{c.sweep ? x * c.unit : base.delta};
    for (Scheme s : c.schemes) {
      const Eigen::Vector4d e = scheme_levels(c, p, s);
      for (int i = 0; i < 4; ++i) row.push_back(e[i] - e[0]);
    }
    table.rows.push_back(std::move(row));
  }
  append_config_metadata(table, c);
  return table;
}

ResultTable run_deviations(const ExperimentConfig& c) {
  c.validate();
  if (c.mode != Mode::deviations)
    throw ConfigError("run_deviations requires mode = deviations");
  const ModelParams base = internal_params(c);

  ResultTable table;
  const std::string xname =
      c.sweep ? sweep_variable_name(c.sweep->variable) : "delta";
  table.columns.push_back(xname);
  for (Scheme s : c.schemes) {
    table.columns.push_back(scheme_name(s) + "_dw01");
    table.columns.push_back(scheme_name(s) + "_dw02");
  }

  for (double x : sweep_values(c, base.delta)) {
    const ModelParams p = at_sweep_value(c, base, x * c.unit);
    const BohrPair ref =
        bohr_from_values(eigh(build_exact(p, c.reference_n_fock)).values);
    std::vector<double> row{c.sweep ? x * c.unit : base.delta};
    for (Scheme s : c.schemes) {
      const BohrPair freqs = bohr_from_values(scheme_levels(c, p, s));
      const BohrPair dev = bohr_deviations(freqs, ref, c.deviations_percent);
      row.push_back(dev.omega01);
      row.push_back(dev.omega02);
    }
    table.rows.push_back(std::move(row));
  }
  append_config_metadata(table, c);
  return table;
}

ResultTable run_dynamics(const ExperimentConfig& c) {
  c.validate();
  if (c.mode != Mode::dynamics)
    throw ConfigError("run_dynamics requires mode = dynamics");
  const ModelParams p = internal_params(c);
  const SpectralDensity sd = SpectralDensity::ohmic(p.kappa, p.omega_c);
  const RateOptions opts = rate_options(c);
  const std::vector<double> times =
      linspace(c.times->start / c.unit, c.times->stop / c.unit, c.times->steps);

  ResultTable table;
  table.columns.push_back("t");
  for (Scheme s : c.schemes)
    table.columns.push_back("sigma_z_" + scheme_name(s));

  std::vector<std::vector<double>> traces;
  for (Scheme s : c.schemes) {
    switch (s) {
      case Scheme::dsr: {
        const DsrParams dsr =
            solve_displacement(p, c.displacement_tol, c.displacement_max_iter);
        const DsrEigensystem es = dsr_eigensystem(p, dsr);
        const CouplingElements h = coupling_elements(es, p, dsr);
        const SecularDynamics dyn =
            secular_dynamics(es, h, sd, p.beta(),
                             InitialState::spin_up_ground(es, p.g), p.g, opts);
        traces.push_back(sigma_z_series(dyn, times));
        table.metadata.emplace_back("omega_plus",
                                    fmt17(dyn.omega_plus.real()) + "," +
                                        fmt17(dyn.omega_plus.imag()));
        table.metadata.emplace_back("omega_minus",
                                    fmt17(dyn.omega_minus.real()) + "," +
                                        fmt17(dyn.omega_minus.imag()));
        const Complex gs[4] = {dyn.gamma1, dyn.gamma2, dyn.gamma3, dyn.gamma4};
        for (int i = 0; i < 4; ++i)
          table.metadata.emplace_back(
              "gamma" + std::to_string(i + 1),
              fmt17(gs[i].real()) + "," + fmt17(gs[i].imag()));
        break;
      }
      case Scheme::exact18:
        traces.push_back(integrate_sigma_z(
            exact_level_system(p, c.reference_n_fock), sd, p.beta(), times, opts));
        break;
      case Scheme::simple:
        traces.push_back(integrate_sigma_z(
            exact_level_system(p, c.simple_n_fock), sd, p.beta(), times, opts));
        break;
    }
  }

  for (size_t i = 0; i < times.size(); ++i) {
    std::vector<double> row{times[i]};
    for (const auto& trace : traces) row.push_back(trace[i]);
    table.rows.push_back(std::move(row));
  }
  append_config_metadata(table, c);
  return table;
}

ResultTable run_rates(const ExperimentConfig& c) {
  c.validate();
  if (c.mode != Mode::rates) throw ConfigError("run_rates requires mode = rates");
  const ModelParams p = internal_params(c);
  const SpectralDensity sd = SpectralDensity::ohmic(p.kappa, p.omega_c);
  const DsrParams dsr =
      solve_displacement(p, c.displacement_tol, c.displacement_max_iter);
  const DsrEigensystem es = dsr_eigensystem(p, dsr);
  const CouplingElements h = coupling_elements(es, p, dsr);
  const SecularDynamics dyn = secular_dynamics(
      es, h, sd, p.beta(), InitialState::spin_up_ground(es, p.g), p.g,
      rate_options(c));

  ResultTable table;
  table.columns = {"delta",          "omega01",        "omega02",
                   "gamma1_re",      "gamma1_im",      "gamma2_re",
                   "gamma2_im",      "gamma3_re",      "gamma3_im",
                   "gamma4_re",      "gamma4_im",      "omega_plus_re",
                   "omega_plus_im",  "omega_minus_re", "omega_minus_im",
                   "delta_tilde",    "s_re",           "s_im",
                   "a_coef",         "b_coef"};
  table.rows.push_back({p.delta, dyn.omega01, dyn.omega02,
                        dyn.gamma1.real(), dyn.gamma1.imag(),
                        dyn.gamma2.real(), dyn.gamma2.imag(),
                        dyn.gamma3.real(), dyn.gamma3.imag(),
                        dyn.gamma4.real(), dyn.gamma4.imag(),
                        dyn.omega_plus.real(), dyn.omega_plus.imag(),
                        dyn.omega_minus.real(), dyn.omega_minus.imag(),
                        dsr.delta_tilde, dsr.s.real(), dsr.s.imag(),
                        es.a_coef, es.b_coef});
  append_config_metadata(table, c);
  return table;
}

ResultTable run_jeff(const ExperimentConfig& c) {
  c.validate();
  if (c.mode != Mode::jeff) throw ConfigError("run_jeff requires mode = jeff");
  const ModelParams p = internal_params(c);
  const SpectralDensity ohmic = SpectralDensity::ohmic(p.kappa, p.omega_c);
  const double peak = c.jeff_omega.value_or(c.params.omega0) * c.unit;
  const double kappa_eff = p.kappa > 0.0 ? p.kappa : 1e-12;
  const SpectralDensity jeff =
      SpectralDensity::lorentzian_effective(c.jeff_alpha, peak, kappa_eff);

  std::vector<double> grid;
  if (c.sweep)
    for (double w : sweep_values(c, 0.0)) grid.push_back(w * c.unit);
  else
    grid = linspace(0.0, 3.0 * p.omega0, 301);

  ResultTable table;
  table.columns = {"omega", "j_ohmic", "j_eff"};
  for (double w : grid)
    table.rows.push_back({w, ohmic_j(ohmic, w), lorentzian_j_eff(jeff, w)});
  append_config_metadata(table, c);
  return table;
}

ResultTable run_experiment(const ExperimentConfig& c) {
  switch (c.mode) {
    case Mode::spectrum: return run_spectrum(c);
    case Mode::deviations: return run_deviations(c);
    case Mode::dynamics: return run_dynamics(c);
    case Mode::rates: return run_rates(c);
    case Mode::jeff: return run_jeff(c);
  }
  throw ConfigError("unknown mode");
}

void write_csv(const ResultTable& table, std::ostream& out) {
  for (const auto& [key, value] : table.metadata)
    out << "# " << key << " = " << value << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << fmt17(row[i]);
    }
    out << "\n";
  }
}

void write_json(const ResultTable& table, std::ostream& out) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) meta[key] = value;
  j["metadata"] = meta;
  j["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) rows.push_back(row);
  j["rows"] = rows;
  out << j.dump(2) << "\n";
}

std::vector<std::string> preset_names() {
  return {"fig1a", "fig1b", "fig1c", "fig2"};
}

std::string preset_config(const std::string& name) {
  static const std::map<std::string, std::string> presets = {
      {"fig1a",
       "# Four lowest TSS-HO levels vs tunneling amplitude at g = 0.3 omega0\n"
       "mode = spectrum\n"
       "delta = 1\n"
       "omega0 = 1\n"
       "g_re = 0.3\n"
       "g_im = 0\n"
       "kappa = 0.02\n"
       "omega_c = 10\n"
       "temperature = 0.1\n"
       "sweep_variable = delta\n"
       "sweep_start = 0.05\n"
       "sweep_stop = 2\n"
       "sweep_steps = 40\n"
       "schemes = exact18,simple,dsr\n"},
      {"fig1b",
       "# Bohr-frequency deviations vs coupling at resonance (delta = omega0)\n"
       "mode = deviations\n"
       "delta = 1\n"
       "omega0 = 1\n"
       "g_re = 0.3\n"
       "g_im = 0\n"
       "kappa = 0.02\n"
       "omega_c = 10\n"
       "temperature = 0.1\n"
       "sweep_variable = g\n"
       "sweep_start = 0.025\n"
       "sweep_stop = 0.4\n"
       "sweep_steps = 16\n"
       "schemes = simple,dsr\n"},
      {"fig1c",
       "# Bohr-frequency deviations vs tunneling amplitude at g = 0.4 omega0\n"
       "mode = deviations\n"
       "delta = 1\n"
       "omega0 = 1\n"
       "g_re = 0.4\n"
       "g_im = 0\n"
       "kappa = 0.02\n"
       "omega_c = 10\n"
       "temperature = 0.1\n"
       "sweep_variable = delta\n"
       "sweep_start = 0.05\n"
       "sweep_stop = 2\n"
       "sweep_steps = 40\n"
       "schemes = simple,dsr\n"},
      {"fig2",
       "# Dissipative sigma_z dynamics at resonance, g = 0.3, kBT = 0.1\n"
       "mode = dynamics\n"
       "delta = 1\n"
       "omega0 = 1\n"
       "g_re = 0.3\n"
       "g_im = 0\n"
       "kappa = 0.02\n"
       "omega_c = 10\n"
       "temperature = 0.1\n"
       "times_start = 0\n"
       "times_stop = 200\n"
       "times_steps = 4000\n"
       "schemes = dsr,exact18\n"}};
  const auto it = presets.find(name);
  if (it == presets.end()) throw ConfigError("unknown preset: " + name);
  return it->second;
}

}  // namespace spinboson
