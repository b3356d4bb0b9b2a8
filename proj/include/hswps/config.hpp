#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "hswps/dispatch.hpp"
#include "hswps/economics.hpp"
#include "hswps/optimizer.hpp"
#include "hswps/weather.hpp"

// Run configuration: one JSON file describing the site, the load, the
// component catalogs and which entries to use, costs, objective weights,
// and search bounds. Parsing is strict: unknown fields, wrong types, and
// invariant violations all fail with the offending field path.

namespace hswps {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// File missing or unreadable.
struct ConfigFileError : ConfigError {
  using ConfigError::ConfigError;
};
// Not valid JSON.
struct ConfigSyntaxError : ConfigError {
  using ConfigError::ConfigError;
};
// Valid JSON with missing/unknown fields or wrong types.
struct ConfigSchemaError : ConfigError {
  using ConfigError::ConfigError;
};
// Well-formed values that violate a domain invariant.
struct ConfigInvariantError : ConfigError {
  using ConfigError::ConfigError;
};

struct RunConfig {
  MonthlyClimate site;
  LoadProfile load;
  std::map<std::string, PVModuleSpec> pv_modules;
  std::map<std::string, WindTurbineSpec> wind_turbines;
  std::map<std::string, BatterySpec> batteries;
  // Selected catalog entries for this run.
  std::string pv_module;
  std::string wind_turbine;
  std::string battery;
  CostModel costs;
  ObjectiveWeights weights;
  SearchBounds bounds;
  double bus_voltage_v = 48.0;
  ShearModel shear;
  double derate = 1.0;
  RandomSeed seed;
  std::string output_dir = "out";
};

RunConfig parse_run_config(const std::filesystem::path& file);
RunConfig parse_run_config_text(const std::string& text,
                                const std::string& source_name = "<string>");

// Deterministic JSON; parse_run_config_text(serialize_run_config(c)) is
// semantically identical to c.
std::string serialize_run_config(const RunConfig& config);

const PVModuleSpec& selected_pv(const RunConfig& config);
const WindTurbineSpec& selected_wt(const RunConfig& config);
const BatterySpec& selected_battery(const RunConfig& config);

SystemConfiguration make_system_configuration(const RunConfig& config,
                                              int n_pv_parallel, int n_wt,
                                              int n_bat_parallel);

OptimizationProblem make_problem(const RunConfig& config);

}  // namespace hswps
