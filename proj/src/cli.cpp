#include "spinboson/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinboson/errors.hpp"
#include "spinboson/experiment.hpp"
#include "spinboson/version.hpp"

namespace spinboson {

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"spinboson: TSS-HO low-energy spectrum and dissipative dynamics"};
  app.set_version_flag("--version", std::string(kVersion));

  std::string mode_str;
  app.add_option("mode", mode_str,
                 "experiment mode: spectrum|deviations|dynamics|rates|jeff")
      ->required();
  std::string config_path;
  app.add_option("--config", config_path, "config file (flat key=value or JSON)");
  std::string preset;
  app.add_option("--preset", preset, "built-in preset: fig1a|fig1b|fig1c|fig2");
  std::string out_path;
  app.add_option("--out", out_path, "output file (default stdout)");
  std::string format_str;
  app.add_option("--format", format_str, "output format: csv|json");
  std::vector<std::string> scheme_strs;
  app.add_option("--scheme", scheme_strs, "schemes to evaluate")
      ->delimiter(',');
  bool no_lamb_shift = false;
  app.add_flag("--no-lamb-shift", no_lamb_shift,
               "drop the principal-value (Lamb shift) rate contributions");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ExperimentConfig config;
    if (!preset.empty()) {
      config = parse_config(preset_config(preset));
      if (!config_path.empty()) {
        // Config file keys override the preset.
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config file: " + config_path);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        ExperimentConfig overlay = parse_config(serialize_config(config) + "\n" + text);
        config = overlay;
      }
    } else if (!config_path.empty()) {
      config = parse_config_file(config_path);
    } else {
      throw ConfigError("either --config or --preset is required");
    }

    if (mode_str == "spectrum") config.mode = Mode::spectrum;
    else if (mode_str == "deviations") config.mode = Mode::deviations;
    else if (mode_str == "dynamics") config.mode = Mode::dynamics;
    else if (mode_str == "rates") config.mode = Mode::rates;
    else if (mode_str == "jeff") config.mode = Mode::jeff;
    else throw ConfigError("unknown mode: " + mode_str);

    if (!scheme_strs.empty()) {
      config.schemes.clear();
      for (const auto& s : scheme_strs) {
        if (s == "exact18") config.schemes.push_back(Scheme::exact18);
        else if (s == "simple") config.schemes.push_back(Scheme::simple);
        else if (s == "dsr") config.schemes.push_back(Scheme::dsr);
        else throw ConfigError("unknown scheme: " + s);
      }
    }
    if (!format_str.empty()) {
      if (format_str == "csv") config.format = OutputFormat::csv;
      else if (format_str == "json") config.format = OutputFormat::json;
      else throw ConfigError("unknown format: " + format_str);
    }
    if (no_lamb_shift) config.lamb_shift = false;
    if (!out_path.empty()) config.output = out_path;

    const ResultTable table = run_experiment(config);

    auto emit = [&](std::ostream& os) {
      if (config.format == OutputFormat::csv) write_csv(table, os);
      else write_json(table, os);
    };
    if (config.output.empty()) {
      emit(std::cout);
    } else {
      std::ofstream out(config.output);
      if (!out) throw ConfigError("cannot open output file: " + config.output);
      emit(out);
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spinboson
