#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "hswps/config.hpp"

using namespace hswps;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string shipped_config_text() {
  return read_file(std::string(HSWPS_SOURCE_DIR) + "/configs/dadakharka.json");
}

// One-off textual mutation; fails the test if the anchor is missing so a
// config edit cannot silently defuse these checks.
std::string replaced(std::string text, const std::string& from,
                     const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  return text;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("the shipped site study parses with the documented selections") {
  const RunConfig config = parse_run_config(std::string(HSWPS_SOURCE_DIR) +
                                            "/configs/dadakharka.json");
  CHECK(config.bus_voltage_v == 48.0);
  CHECK(config.seed.value == 42);
  CHECK(config.pv_module == "TSM-175DA01");
  CHECK(config.wind_turbine == "H3.1");
  CHECK(config.battery == "T-105");
  CHECK(selected_pv(config).rated_power_w == 175.0);
  CHECK(selected_wt(config).rated_power_w == 1000.0);
  CHECK(selected_battery(config).nominal_voltage_v == 6.0);
  CHECK(config.site.latitude_deg == 27.2);
  CHECK(config.site.monthly_mean_wind_ms[6] == 6.6);
  CHECK(config.load.at(3) == 750.0);
  CHECK(config.load.at(12) == 1500.0);
  CHECK(config.bounds.n_pv_parallel_max == 30);
  CHECK(config.bounds.lpsp_target == 0.0001);
  CHECK(config.derate == 0.9);
  CHECK(config.output_dir == "out");
  // Two entries of every catalog ship with the study.
  CHECK(config.pv_modules.size() == 2);
  CHECK(config.wind_turbines.size() == 2);
  CHECK(config.batteries.size() == 2);
}

TEST_CASE("serialization round-trips to identical text") {
  const RunConfig first = parse_run_config_text(shipped_config_text());
  const std::string once = serialize_run_config(first);
  const RunConfig second = parse_run_config_text(once);
  const std::string twice = serialize_run_config(second);
  CHECK(once == twice);
  // Semantic identity spot checks across the trip.
  CHECK(second.seed.value == first.seed.value);
  CHECK(second.load.at(5) == first.load.at(5));
  CHECK(second.load.at(6) == first.load.at(6));
  CHECK(second.costs.battery_unit.lifetime_yr ==
        first.costs.battery_unit.lifetime_yr);
  CHECK(second.weights.w_luec == first.weights.w_luec);
  CHECK(second.shear.exponent == first.shear.exponent);
}

TEST_CASE("file problems and syntax problems raise distinct errors") {
  CHECK_THROWS_AS(parse_run_config("/nonexistent/dir/missing.json"),
                  ConfigFileError);
  CHECK_THROWS_AS(parse_run_config_text(""), ConfigSyntaxError);
  CHECK_THROWS_AS(parse_run_config_text("{ \"site\": "), ConfigSyntaxError);
  CHECK_THROWS_AS(parse_run_config_text("[1, 2, 3]"), ConfigSchemaError);
  CHECK_THROWS_AS(parse_run_config_text("null"), ConfigSchemaError);
}

TEST_CASE("schema violations name the offending field path") {
  const std::string base = shipped_config_text();

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(
          replaced(base, "\"seed\": 42", "\"seed\": 42, \"extra_knob\": 1")),
      "config.extra_knob: unknown field", ConfigSchemaError);

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(
          replaced(base, "\"bus_voltage_v\": 48.0", "\"bus_voltage_v\": \"48\"")),
      "system.bus_voltage_v: expected a number, got string", ConfigSchemaError);

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(replaced(base, "\"latitude_deg\": 27.2,", "")),
      "site.latitude_deg: missing required field", ConfigSchemaError);

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(replaced(
          base, "[3.2, 3.4, 3.8, 4.4, 5.2, 6.2, 6.6, 6.4, 5.6, 4.4, 3.6, 3.2]",
          "[3.2, 3.4, 3.8, 4.4, 5.2, 6.2, 6.6, 6.4, 5.6, 4.4, 3.6]")),
      "site.monthly_mean_wind_ms: expected 12 entries, got 11",
      ConfigSchemaError);

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(
          replaced(base, "\"lifetime_yr\": 20", "\"lifetime_yr\": 20.5")),
      "costs.wind_turbine_unit.lifetime_yr: expected an integer, got number",
      ConfigSchemaError);

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(
          replaced(base, "\"form\": \"lpsp_luec\"", "\"form\": \"maximize\"")),
      "weights.form: expected \"lpsp_luec\" or \"reliability_luec\", got "
      "\"maximize\"",
      ConfigSchemaError);

  // A load must be given in exactly one of the two shapes.
  CHECK_THROWS_AS(parse_run_config_text(replaced(
                      base, "\"two_level\": {",
                      "\"hourly_wh\": [1, 2], \"two_level\": {")),
                  ConfigSchemaError);
}

TEST_CASE("invariant violations carry the field path and entry name") {
  const std::string base = shipped_config_text();

  // Both shipped batteries share this soc_min; breaking the first is
  // reported against its catalog entry.
  try {
    parse_run_config_text(replaced(base, "\"soc_min\": 0.3", "\"soc_min\": 1.0"));
    FAIL("expected ConfigInvariantError");
  } catch (const ConfigInvariantError& e) {
    const std::string what = e.what();
    CHECK(what.find("catalogs.batteries.GFM-800") != std::string::npos);
    CHECK(what.find("soc_min") != std::string::npos);
  }

  CHECK_THROWS_WITH_AS(
      parse_run_config_text(replaced(base, "\"pv_module\": \"TSM-175DA01\"",
                                     "\"pv_module\": \"nope\"")),
      "system.pv_module: unknown catalog entry 'nope'", ConfigInvariantError);

  // 7 V units cannot stack to a 48 V bus.
  try {
    parse_run_config_text(replaced(base, "\"nominal_voltage_v\": 6.0",
                                   "\"nominal_voltage_v\": 7.0"));
    FAIL("expected ConfigInvariantError");
  } catch (const ConfigInvariantError& e) {
    CHECK(std::string(e.what()).find("system.battery") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_run_config_text(replaced(
                      base, "\"w_reliability\": 0.5", "\"w_reliability\": 0.6")),
                  ConfigInvariantError);

  CHECK_THROWS_AS(parse_run_config_text(replaced(
                      base, "\"lpsp_target\": 0.0001", "\"lpsp_target\": 2.0")),
                  ConfigInvariantError);

  try {
    parse_run_config_text(
        replaced(base, "\"v_rated\": 9.0", "\"v_rated\": 2.0"));
    FAIL("expected ConfigInvariantError");
  } catch (const ConfigInvariantError& e) {
    CHECK(std::string(e.what()).find("catalogs.wind_turbines.H3.1") !=
          std::string::npos);
  }
}

TEST_CASE("system configurations built from a run config derive their wiring") {
  const RunConfig config = parse_run_config_text(shipped_config_text());
  const SystemConfiguration sc = make_system_configuration(config, 23, 2, 3);
  CHECK(sc.n_pv_series == 2);   // 24 V modules on the 48 V bus
  CHECK(sc.n_bat_series == 8);  // 6 V batteries on the 48 V bus
  CHECK(sc.n_pv_parallel == 23);
  CHECK(sc.n_wt == 2);
  CHECK(sc.n_bat_parallel == 3);
  CHECK(sc.derate == 0.9);
  CHECK(pv_array_rated_w(sc) == doctest::Approx(8050.0));
  CHECK(battery_bank_ah(sc) == 675.0);

  CHECK_THROWS_AS(make_system_configuration(config, 0, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("an optimization problem mirrors the run config") {
  const RunConfig config = parse_run_config_text(shipped_config_text());
  const OptimizationProblem problem = make_problem(config);
  CHECK(problem.bus_voltage_v == config.bus_voltage_v);
  CHECK(problem.seed.value == config.seed.value);
  CHECK(problem.bounds.n_wt_max == config.bounds.n_wt_max);
  CHECK(problem.derate == config.derate);
  CHECK(problem.pv.name == "TSM-175DA01");
  CHECK(problem.wt.name == "H3.1");
  CHECK(problem.bat.name == "T-105");
  CHECK(problem.load.at(12) == 1500.0);
  CHECK(problem.shear.exponent == config.shear.exponent);
}

TEST_CASE("selection helpers reject unresolved names") {
  RunConfig empty;
  empty.pv_module = "ghost";
  CHECK_THROWS_AS(selected_pv(empty), ConfigInvariantError);
  CHECK_THROWS_AS(selected_wt(empty), ConfigInvariantError);
  CHECK_THROWS_AS(selected_battery(empty), ConfigInvariantError);
}

TEST_CASE("the comparison config for the incumbent system parses too") {
  const RunConfig config = parse_run_config(
      std::string(HSWPS_SOURCE_DIR) + "/configs/dadakharka_existing.json");
  CHECK(config.pv_module == "KC85T");
  CHECK(config.battery == "GFM-800");
  CHECK(selected_battery(config).capacity_ah == 800.0);
  const SystemConfiguration existing =
      make_system_configuration(config, 18, 1, 2);
  CHECK(existing.n_pv_series == 4);
  CHECK(existing.n_bat_series == 24);
  CHECK(pv_array_rated_w(existing) == doctest::Approx(6120.0));
  CHECK(battery_bank_ah(existing) == 1600.0);
}

}  // TEST_SUITE
