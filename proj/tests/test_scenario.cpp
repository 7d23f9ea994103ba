#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cnsobs/scenario.hpp"

using namespace cnsobs;

TEST_CASE("config round-trips through serialize and parse") {
  for (ScenarioId id :
       {ScenarioId::table1, ScenarioId::table2, ScenarioId::partial_obs,
        ScenarioId::partial_obs_mean_fix, ScenarioId::forced,
        ScenarioId::nonlinear, ScenarioId::density_obs,
        ScenarioId::kernel_design_demo}) {
    ScenarioConfig c = default_scenario(id);
    c.phi_u = 7.25;
    c.grid.n_cells = 128;
    const std::string text = c.serialize();
    const ScenarioConfig back = parse_scenario(text);
    CHECK(back.serialize() == text);
  }
}

TEST_CASE("parser reports the offending key or value") {
  CHECK_THROWS_WITH_AS(parse_scenario("scenario = flights\n"),
                       "scenario: unknown id 'flights'", std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scenario("scenario = table1\nwibble = 3\n"),
                       "unknown key 'wibble'", std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario("scenario = table1\nT = abc\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_scenario("T = 2\n"), std::invalid_argument);  // no id
  CHECK_THROWS_AS(parse_scenario("scenario = table1\nbroken line\n"),
                  std::invalid_argument);
}

TEST_CASE("comments and overrides are applied") {
  const ScenarioConfig c = parse_scenario(
      "# reproduction of the first sweep\n"
      "scenario = table1\n"
      "T = 2.5     # shorter run\n"
      "sweep_values = 0, 5\n");
  CHECK(c.final_time == 2.5);
  REQUIRE(c.sweep_values.size() == 2);
  CHECK(c.sweep_values[1] == 5.0);
  CHECK(c.grid.n_cells == 100);  // untouched default
}

TEST_CASE("out-of-range values fail fast with the field name") {
  ScenarioConfig c = default_scenario(ScenarioId::table1);
  c.mode_k = 80;
  CHECK_THROWS_WITH_AS(c.validate(), "mode_k: must be in 1..n_cells/2",
                       std::invalid_argument);
  c = default_scenario(ScenarioId::table1);
  c.final_time = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = default_scenario(ScenarioId::table1);
  c.sweep_param = "viscosity";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("defaults pin the reference configuration") {
  const ScenarioConfig c = default_scenario(ScenarioId::table1);
  CHECK(c.grid.n_cells == 100);
  CHECK(c.stepper.dt_max == 1e-3);
  CHECK(c.params.gamma == 1.4);
  CHECK(c.params.nu() == doctest::Approx(0.05));
  CHECK(c.final_time == 5.0);
  CHECK(c.amplitude == 0.05);
  CHECK(c.nonlinear_model);
  const ScenarioConfig nl = default_scenario(ScenarioId::nonlinear);
  CHECK(nl.amplitude == 0.5);
}

TEST_CASE("a short table1 sweep produces sensible rows and files") {
  ScenarioConfig c = default_scenario(ScenarioId::table1);
  c.sweep_values = {0.0, 10.0};
  c.final_time = 2.0;
  c.fit_t_start = 0.2;
  c.fit_t_end = 2.0;

  const ScenarioResult r = run_scenario(c, 2);
  REQUIRE(r.summary.rows.size() == 2);
  CHECK(r.summary.status[0] == "ok");
  CHECK(r.summary.status[1] == "ok");
  // theory column reproduces the closed form; numeric tracks it
  CHECK(r.summary.rows[0][1] == doctest::Approx(0.98696044).epsilon(1e-8));
  CHECK(r.summary.rows[1][1] == doctest::Approx(5.98696044).epsilon(1e-8));
  CHECK(r.summary.rows[0][3] == doctest::Approx(0.98696044).epsilon(0.03));
  CHECK(r.summary.rows[1][3] == doctest::Approx(5.98696044).epsilon(0.03));

  const std::string out = (std::filesystem::temp_directory_path() /
                           "cnsobs_scenario_test_out").string();
  std::filesystem::remove_all(out);
  emit_plot_data(r, out);
  CHECK(std::filesystem::exists(out + "/table1/phi_u=0.csv"));
  CHECK(std::filesystem::exists(out + "/table1/phi_u=10.csv"));
  CHECK(std::filesystem::exists(out + "/table1/summary.csv"));
  int files = 0;
  for (auto const& e :
       std::filesystem::directory_iterator(out + "/table1"))
    files += e.is_regular_file() ? 1 : 0;
  CHECK(files == 3);  // sweep size + summary

  // rerunning reproduces byte-identical outputs
  const std::string out2 = out + "_rerun";
  std::filesystem::remove_all(out2);
  emit_plot_data(run_scenario(c, 1), out2);
  for (const char* name : {"/table1/phi_u=0.csv", "/table1/phi_u=10.csv",
                           "/table1/summary.csv"}) {
    std::ifstream a(out + name), b(out2 + name);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
  }

  // CSV cells carry full double precision
  std::ifstream sf(out + "/table1/summary.csv");
  std::string header, row;
  std::getline(sf, header);
  std::getline(sf, row);
  CHECK(row.find("0.9869604401089358") != std::string::npos);
}

TEST_CASE("solver failures are recorded per row and the sweep continues") {
  ScenarioConfig c = default_scenario(ScenarioId::table1);
  c.sweep_values = {0.0, 1e9};  // absurd feedback blows the run up
  c.final_time = 1.0;
  c.fit_t_start = 0.1;
  c.fit_t_end = 1.0;
  const ScenarioResult r = run_scenario(c, 1);
  CHECK(r.summary.status[0] == "ok");
  CHECK(r.summary.status[1] != "ok");
}

TEST_CASE("unknown scenario id is rejected") {
  CHECK_THROWS_AS(scenario_from_string("table9"), std::invalid_argument);
  CHECK(std::string(to_string(ScenarioId::partial_obs)) == "partial_obs");
}
