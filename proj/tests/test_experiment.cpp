#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "spinboson/cli.hpp"
#include "spinboson/experiment.hpp"
#include "spinboson/hamiltonians.hpp"

using namespace spinboson;

namespace {

ExperimentConfig fig_config(const std::string& name) {
  return parse_config(preset_config(name));
}

ExperimentConfig config_from_metadata(const ResultTable& table) {
  std::ostringstream text;
  for (const auto& [key, value] : table.metadata) {
    if (key == "version" || key == "omega_plus" || key == "omega_minus" ||
        key.rfind("gamma", 0) == 0)
      continue;
    text << key << " = " << value << "\n";
  }
  return parse_config(text.str());
}

int run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"spinboson"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path(std::string("/tmp/spinboson_test_") + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("config round trip") {
  ExperimentConfig c = fig_config("fig1a");
  c.format = OutputFormat::json;
  c.output = "out.csv";
  const ExperimentConfig back = parse_config(serialize_config(c));
  CHECK(back == c);

  ExperimentConfig dyn = fig_config("fig2");
  const ExperimentConfig dyn_back = parse_config(serialize_config(dyn));
  CHECK(dyn_back == dyn);
}

TEST_CASE("json config is accepted") {
  const ExperimentConfig c = parse_config(R"({
    "mode": "spectrum",
    "delta": 0.8,
    "omega0": 1.0,
    "g_re": 0.25,
    "schemes": "dsr,simple",
    "sweep_variable": "delta",
    "sweep_start": 0.1,
    "sweep_stop": 1.5,
    "sweep_steps": 5
  })");
  CHECK(c.mode == Mode::spectrum);
  CHECK(c.params.delta == 0.8);
  CHECK(c.schemes.size() == 2);
  CHECK(c.sweep->steps == 5);
}

TEST_CASE("config validation failures") {
  CHECK_THROWS_AS(parse_config("nonsense"), ConfigError);
  CHECK_THROWS_AS(parse_config("bogus_key = 1"), ConfigError);

  ExperimentConfig c = fig_config("fig1a");
  c.sweep->steps = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.sweep->steps = 10;
  c.sweep->start = 3.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);

  ExperimentConfig dev = fig_config("fig1b");
  dev.schemes.push_back(Scheme::exact18);
  CHECK_THROWS_AS(dev.validate(), ConfigError);

  ExperimentConfig dyn = fig_config("fig2");
  dyn.times.reset();
  CHECK_THROWS_AS(dyn.validate(), ConfigError);

  ExperimentConfig bad = fig_config("fig1a");
  bad.params.omega0 = -2.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("spectrum schemes coincide at zero coupling") {
  ExperimentConfig c = fig_config("fig1a");
  c.params.g = 0.0;
  // Keep delta below omega0 so the four lowest product levels all live
  // inside the truncated spaces.
  c.sweep->stop = 0.95;
  c.sweep->steps = 8;
  const ResultTable table = run_spectrum(c);
  REQUIRE(table.columns.size() == 13);
  for (const auto& row : table.rows) {
    for (int i = 0; i < 4; ++i) {
      CHECK(row[1 + i] == doctest::Approx(row[5 + i]).epsilon(1e-10));
      CHECK(row[1 + i] == doctest::Approx(row[9 + i]).epsilon(1e-10));
    }
    CHECK(row[1] == 0.0);  // ground shifted to zero
  }
}

TEST_CASE("single-point spectrum matches the analytic eigensystem") {
  ExperimentConfig c = fig_config("fig1a");
  c.sweep.reset();
  c.schemes = {Scheme::dsr};
  const ResultTable table = run_spectrum(c);
  REQUIRE(table.rows.size() == 1);

  const ModelParams p = c.params;
  const DsrEigensystem es = dsr_eigensystem(p, solve_displacement(p));
  const auto& row = table.rows[0];
  CHECK(row[1] == doctest::Approx(0.0));
  CHECK(row[2] == doctest::Approx(es.e1 - es.e0).epsilon(1e-12));
  CHECK(row[3] == doctest::Approx(es.e2 - es.e0).epsilon(1e-12));
  CHECK(row[4] == doctest::Approx(es.e3 - es.e0).epsilon(1e-12));
}

TEST_CASE("deviations vanish with the coupling") {
  ExperimentConfig c = fig_config("fig1c");
  c.params.g = 1e-6;
  c.sweep->steps = 6;
  const ResultTable table = run_deviations(c);
  for (const auto& row : table.rows)
    for (size_t i = 1; i < row.size(); ++i) CHECK(std::abs(row[i]) <= 1e-6);
}

TEST_CASE("fig1b deviations stay within the expected envelope") {
  const ResultTable table = run_deviations(fig_config("fig1b"));
  double dsr01 = 0.0, dsr02 = 0.0;
  for (const auto& row : table.rows) {
    dsr01 = std::max(dsr01, std::abs(row[3]));
    dsr02 = std::max(dsr02, std::abs(row[4]));
  }
  CHECK(dsr01 <= 0.1);  // percent
  CHECK(dsr02 <= 0.7);  // percent
}

TEST_CASE("dynamics trace starts at one and carries the sidecar") {
  ExperimentConfig c = fig_config("fig2");
  c.times->stop = 20.0;
  c.times->steps = 200;
  c.schemes = {Scheme::dsr};
  const ResultTable table = run_dynamics(c);
  CHECK(table.rows.front()[0] == 0.0);
  CHECK(table.rows.front()[1] == doctest::Approx(1.0).epsilon(1e-12));

  bool has_omega_plus = false, has_gamma1 = false;
  for (const auto& [key, value] : table.metadata) {
    if (key == "omega_plus") has_omega_plus = true;
    if (key == "gamma1") has_gamma1 = true;
  }
  CHECK(has_omega_plus);
  CHECK(has_gamma1);
}

TEST_CASE("undamped dynamics keeps a unit envelope") {
  ExperimentConfig c = fig_config("fig2");
  c.params.kappa = 0.0;
  c.times->stop = 60.0;
  c.times->steps = 1200;
  c.schemes = {Scheme::dsr};
  const ResultTable table = run_dynamics(c);
  double max_abs = 0.0;
  for (const auto& row : table.rows)
    max_abs = std::max(max_abs, std::abs(row[1]));
  CHECK(max_abs <= 1.0 + 1e-9);
  double late_max = 0.0;
  for (const auto& row : table.rows)
    if (row[0] > 30.0) late_max = std::max(late_max, std::abs(row[1]));
  CHECK(late_max > 0.8);
}

TEST_CASE("deterministic CSV output") {
  ExperimentConfig c = fig_config("fig1a");
  c.sweep->steps = 5;
  std::ostringstream a, b;
  write_csv(run_spectrum(c), a);
  write_csv(run_spectrum(c), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# mode = spectrum") != std::string::npos);
}

TEST_CASE("tables are reproducible from their own metadata") {
  ExperimentConfig c = fig_config("fig1c");
  c.sweep->steps = 4;
  const ResultTable first = run_experiment(c);
  const ExperimentConfig recovered = config_from_metadata(first);
  const ResultTable second = run_experiment(recovered);
  REQUIRE(first.rows.size() == second.rows.size());
  for (size_t i = 0; i < first.rows.size(); ++i)
    for (size_t jj = 0; jj < first.rows[i].size(); ++jj)
      CHECK(first.rows[i][jj] == second.rows[i][jj]);
}

TEST_CASE("jeff mode emits both densities") {
  ExperimentConfig c;
  c.mode = Mode::jeff;
  c.params.kappa = 0.02;
  c.sweep = SweepSpec{SweepSpec::Variable::omega, 0.0, 3.0, 31};
  const ResultTable table = run_jeff(c);
  REQUIRE(table.rows.size() == 31);
  CHECK(table.rows[0][1] == 0.0);
  CHECK(table.rows[0][2] == 0.0);
  for (const auto& row : table.rows) {
    CHECK(row[1] >= 0.0);
    CHECK(row[2] >= 0.0);
  }
}

TEST_CASE("cli runs presets and honors exit codes") {
  SUBCASE("successful rates run to a file") {
    TempFile out("rates.csv");
    TempFile cfg("rates.cfg");
    {
      std::ofstream f(cfg.path);
      f << "mode = rates\ndelta = 1\nomega0 = 1\ng_re = 0.3\n"
           "kappa = 0.02\nomega_c = 10\ntemperature = 0.1\n";
    }
    CHECK(run_cli({"rates", "--config", cfg.path, "--out", out.path}) == 0);
    std::ifstream in(out.path);
    std::string first_line;
    std::getline(in, first_line);
    CHECK(first_line.rfind("#", 0) == 0);
  }
  SUBCASE("config error exits 2") {
    TempFile cfg("bad.cfg");
    {
      std::ofstream f(cfg.path);
      f << "mode = spectrum\nomega0 = -1\n";
    }
    CHECK(run_cli({"spectrum", "--config", cfg.path}) == 2);
    CHECK(run_cli({"spectrum"}) == 2);
    CHECK(run_cli({"bogus", "--preset", "fig1a"}) == 2);
  }
  SUBCASE("numerical failure exits 3") {
    TempFile cfg("stall.cfg");
    {
      std::ofstream f(cfg.path);
      f << "mode = rates\ndelta = 1\nomega0 = 1\ng_re = 0.3\n"
           "kappa = 0.02\nomega_c = 10\ntemperature = 0.1\n"
           "displacement_max_iter = 1\n";
    }
    CHECK(run_cli({"rates", "--config", cfg.path}) == 3);
  }
  SUBCASE("json output from a preset") {
    TempFile out("fig1b.json");
    ExperimentConfig small = fig_config("fig1b");
    small.sweep->steps = 3;
    TempFile cfg("fig1b_small.cfg");
    {
      std::ofstream f(cfg.path);
      f << serialize_config(small);
    }
    CHECK(run_cli({"deviations", "--config", cfg.path, "--format", "json",
                   "--out", out.path}) == 0);
    std::ifstream in(out.path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("\"columns\"") != std::string::npos);
  }
}
