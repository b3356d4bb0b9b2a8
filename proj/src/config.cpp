#include "hswps/config.hpp"

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace hswps {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path,
                              const std::string& what) {
  throw ConfigSchemaError(path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    schema_fail(path, std::string("expected an object, got ") + j.type_name());
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing required field");
  return *it;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) schema_fail(path + "." + it.key(), "unknown field");
  }
}

double get_number(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_number()) {
    schema_fail(path + "." + key,
                std::string("expected a number, got ") + v.type_name());
  }
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& path, const char* key,
                     double fallback) {
  return obj.contains(key) ? get_number(obj, path, key) : fallback;
}

int get_int(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_number_integer()) {
    schema_fail(path + "." + key,
                std::string("expected an integer, got ") + v.type_name());
  }
  const std::int64_t raw = v.get<std::int64_t>();
  if (raw < std::numeric_limits<int>::min() ||
      raw > std::numeric_limits<int>::max()) {
    schema_fail(path + "." + key, "integer out of range");
  }
  return static_cast<int>(raw);
}

std::uint64_t get_u64(const json& obj, const std::string& path,
                      const char* key) {
  const json& v = member(obj, path, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  schema_fail(path + "." + key, "expected a non-negative integer");
}

std::string get_string(const json& obj, const std::string& path,
                       const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_string()) {
    schema_fail(path + "." + key,
                std::string("expected a string, got ") + v.type_name());
  }
  return v.get<std::string>();
}

std::string get_string_or(const json& obj, const std::string& path,
                          const char* key, std::string fallback) {
  return obj.contains(key) ? get_string(obj, path, key) : fallback;
}

std::array<double, kMonthsPerYear> get_month_array(const json& obj,
                                                   const std::string& path,
                                                   const char* key) {
  const json& v = member(obj, path, key);
  const std::string field = path + "." + key;
  if (!v.is_array()) {
    schema_fail(field, std::string("expected an array, got ") + v.type_name());
  }
  if (v.size() != static_cast<std::size_t>(kMonthsPerYear)) {
    schema_fail(field,
                "expected 12 entries, got " + std::to_string(v.size()));
  }
  std::array<double, kMonthsPerYear> out{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      schema_fail(field + "[" + std::to_string(i) + "]", "expected a number");
    }
    out[i] = v[i].get<double>();
  }
  return out;
}

// Runs fn and reattaches the field path to any invariant failure.
template <typename Fn>
void guard(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigInvariantError(path + ": " + e.what());
  }
}

MonthlyClimate parse_site(const json& j) {
  expect_object(j, "site");
  check_keys(j, "site",
             {"latitude_deg", "longitude_deg", "anemometer_height_m",
              "monthly_mean_wind_ms", "monthly_mean_temp_c",
              "monthly_mean_irradiation_kwh_m2_day"});
  MonthlyClimate site;
  site.latitude_deg = get_number(j, "site", "latitude_deg");
  site.longitude_deg = get_number_or(j, "site", "longitude_deg", 0.0);
  site.anemometer_height_m =
      get_number_or(j, "site", "anemometer_height_m", 10.0);
  site.monthly_mean_wind_ms = get_month_array(j, "site", "monthly_mean_wind_ms");
  site.monthly_mean_temp_c = get_month_array(j, "site", "monthly_mean_temp_c");
  site.monthly_mean_irradiation_kwh_m2_day =
      get_month_array(j, "site", "monthly_mean_irradiation_kwh_m2_day");
  return site;
}

LoadProfile parse_load(const json& j) {
  expect_object(j, "load");
  check_keys(j, "load", {"description", "hourly_wh", "two_level"});
  const bool has_hourly = j.contains("hourly_wh");
  const bool has_two_level = j.contains("two_level");
  if (has_hourly == has_two_level) {
    schema_fail("load", "provide exactly one of hourly_wh and two_level");
  }
  std::string description = get_string_or(j, "load", "description", "");
  if (has_hourly) {
    const json& arr = j["hourly_wh"];
    if (!arr.is_array()) {
      schema_fail("load.hourly_wh",
                  std::string("expected an array, got ") + arr.type_name());
    }
    LoadProfile load;
    load.description = std::move(description);
    load.hourly_wh.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_number()) {
        schema_fail("load.hourly_wh[" + std::to_string(i) + "]",
                    "expected a number");
      }
      load.hourly_wh.push_back(arr[i].get<double>());
    }
    return load;
  }
  const json& t = j["two_level"];
  expect_object(t, "load.two_level");
  check_keys(t, "load.two_level",
             {"full_wh", "half_wh", "full_start_hour", "full_end_hour"});
  LoadProfile load;
  guard("load.two_level", [&] {
    load = two_level_load(get_number(t, "load.two_level", "full_wh"),
                          get_number(t, "load.two_level", "half_wh"),
                          get_int(t, "load.two_level", "full_start_hour"),
                          get_int(t, "load.two_level", "full_end_hour"),
                          std::move(description));
  });
  return load;
}

PVModuleSpec parse_pv_module(const json& j, const std::string& path,
                             const std::string& name) {
  expect_object(j, path);
  check_keys(j, path,
             {"rated_power_w", "v_oc", "i_sc", "v_mp", "i_mp", "alpha_i",
              "beta_v", "noct_c", "nominal_voltage_v"});
  PVModuleSpec spec;
  spec.name = name;
  spec.rated_power_w = get_number(j, path, "rated_power_w");
  spec.v_oc = get_number(j, path, "v_oc");
  spec.i_sc = get_number(j, path, "i_sc");
  spec.v_mp = get_number(j, path, "v_mp");
  spec.i_mp = get_number(j, path, "i_mp");
  spec.alpha_i = get_number(j, path, "alpha_i");
  spec.beta_v = get_number(j, path, "beta_v");
  spec.noct_c = get_number_or(j, path, "noct_c", 47.0);
  spec.nominal_voltage_v = get_number(j, path, "nominal_voltage_v");
  return spec;
}

WindTurbineSpec parse_wind_turbine(const json& j, const std::string& path,
                                   const std::string& name) {
  expect_object(j, path);
  check_keys(j, path, {"rated_power_w", "v_cut_in", "v_rated", "v_cut_out",
                       "hub_height_m"});
  WindTurbineSpec spec;
  spec.name = name;
  spec.rated_power_w = get_number(j, path, "rated_power_w");
  spec.v_cut_in = get_number(j, path, "v_cut_in");
  spec.v_rated = get_number(j, path, "v_rated");
  spec.v_cut_out = get_number(j, path, "v_cut_out");
  spec.hub_height_m = get_number(j, path, "hub_height_m");
  return spec;
}

BatterySpec parse_battery(const json& j, const std::string& path,
                          const std::string& name) {
  expect_object(j, path);
  check_keys(j, path,
             {"nominal_voltage_v", "capacity_ah", "charge_efficiency",
              "discharge_efficiency", "self_discharge_hourly", "soc_min",
              "soc_max"});
  BatterySpec spec;
  spec.name = name;
  spec.nominal_voltage_v = get_number(j, path, "nominal_voltage_v");
  spec.capacity_ah = get_number(j, path, "capacity_ah");
  spec.charge_efficiency =
      get_number_or(j, path, "charge_efficiency", spec.charge_efficiency);
  spec.discharge_efficiency = get_number_or(j, path, "discharge_efficiency",
                                            spec.discharge_efficiency);
  spec.self_discharge_hourly = get_number_or(j, path, "self_discharge_hourly",
                                             spec.self_discharge_hourly);
  spec.soc_min = get_number_or(j, path, "soc_min", spec.soc_min);
  spec.soc_max = get_number_or(j, path, "soc_max", spec.soc_max);
  return spec;
}

ComponentCost parse_component_cost(const json& obj, const std::string& parent,
                                   const char* key) {
  const json& j = member(obj, parent, key);
  const std::string path = parent + "." + key;
  expect_object(j, path);
  check_keys(j, path, {"capital", "replacement", "om_annual", "lifetime_yr"});
  ComponentCost cost;
  cost.capital = get_number(j, path, "capital");
  cost.replacement = get_number_or(j, path, "replacement", cost.capital);
  cost.om_annual = get_number_or(j, path, "om_annual", 0.0);
  cost.lifetime_yr = get_int(j, path, "lifetime_yr");
  return cost;
}

CostModel parse_costs(const json& j) {
  expect_object(j, "costs");
  check_keys(j, "costs",
             {"pv_per_watt", "wind_turbine_unit", "battery_unit",
              "balance_of_system", "project_lifetime_yr", "discount_rate"});
  CostModel costs;
  costs.pv_per_watt = parse_component_cost(j, "costs", "pv_per_watt");
  costs.wind_turbine_unit =
      parse_component_cost(j, "costs", "wind_turbine_unit");
  costs.battery_unit = parse_component_cost(j, "costs", "battery_unit");
  costs.balance_of_system =
      parse_component_cost(j, "costs", "balance_of_system");
  costs.project_lifetime_yr = get_int(j, "costs", "project_lifetime_yr");
  costs.discount_rate = get_number(j, "costs", "discount_rate");
  return costs;
}

ObjectiveWeights parse_weights(const json& j) {
  expect_object(j, "weights");
  check_keys(j, "weights",
             {"w_reliability", "w_luec", "luec_normalizer", "form"});
  ObjectiveWeights weights;
  weights.w_reliability =
      get_number_or(j, "weights", "w_reliability", weights.w_reliability);
  weights.w_luec = get_number_or(j, "weights", "w_luec", weights.w_luec);
  weights.luec_normalizer =
      get_number_or(j, "weights", "luec_normalizer", weights.luec_normalizer);
  const std::string form =
      get_string_or(j, "weights", "form", "lpsp_luec");
  if (form == "lpsp_luec") {
    weights.form = ObjectiveForm::lpsp_luec;
  } else if (form == "reliability_luec") {
    weights.form = ObjectiveForm::reliability_luec;
  } else {
    schema_fail("weights.form",
                "expected \"lpsp_luec\" or \"reliability_luec\", got \"" +
                    form + "\"");
  }
  return weights;
}

SearchBounds parse_bounds(const json& j) {
  expect_object(j, "bounds");
  check_keys(j, "bounds", {"n_pv_parallel_max", "n_wt_max",
                           "n_bat_parallel_max", "lpsp_target"});
  SearchBounds bounds;
  bounds.n_pv_parallel_max = get_int(j, "bounds", "n_pv_parallel_max");
  bounds.n_wt_max = get_int(j, "bounds", "n_wt_max");
  bounds.n_bat_parallel_max = get_int(j, "bounds", "n_bat_parallel_max");
  bounds.lpsp_target =
      get_number_or(j, "bounds", "lpsp_target", bounds.lpsp_target);
  return bounds;
}

RunConfig parse_root(const json& root, const std::string& source) {
  if (!root.is_object()) {
    throw ConfigSchemaError(source + ": top level must be a JSON object");
  }
  check_keys(root, "config",
             {"site", "load", "catalogs", "system", "costs", "weights",
              "bounds", "seed", "output_dir"});

  RunConfig config;
  config.site = parse_site(member(root, "config", "site"));
  config.load = parse_load(member(root, "config", "load"));

  const json& catalogs = member(root, "config", "catalogs");
  expect_object(catalogs, "catalogs");
  check_keys(catalogs, "catalogs",
             {"pv_modules", "wind_turbines", "batteries"});
  const json& pvs = member(catalogs, "catalogs", "pv_modules");
  expect_object(pvs, "catalogs.pv_modules");
  for (auto it = pvs.begin(); it != pvs.end(); ++it) {
    const std::string path = "catalogs.pv_modules." + it.key();
    config.pv_modules.emplace(it.key(),
                              parse_pv_module(it.value(), path, it.key()));
  }
  const json& wts = member(catalogs, "catalogs", "wind_turbines");
  expect_object(wts, "catalogs.wind_turbines");
  for (auto it = wts.begin(); it != wts.end(); ++it) {
    const std::string path = "catalogs.wind_turbines." + it.key();
    config.wind_turbines.emplace(it.key(),
                                 parse_wind_turbine(it.value(), path, it.key()));
  }
  const json& bats = member(catalogs, "catalogs", "batteries");
  expect_object(bats, "catalogs.batteries");
  for (auto it = bats.begin(); it != bats.end(); ++it) {
    const std::string path = "catalogs.batteries." + it.key();
    config.batteries.emplace(it.key(),
                             parse_battery(it.value(), path, it.key()));
  }

  const json& system = member(root, "config", "system");
  expect_object(system, "system");
  check_keys(system, "system",
             {"pv_module", "wind_turbine", "battery", "bus_voltage_v",
              "derate", "shear_exponent"});
  config.pv_module = get_string(system, "system", "pv_module");
  config.wind_turbine = get_string(system, "system", "wind_turbine");
  config.battery = get_string(system, "system", "battery");
  config.bus_voltage_v = get_number(system, "system", "bus_voltage_v");
  config.derate = get_number_or(system, "system", "derate", 1.0);
  config.shear.exponent =
      get_number_or(system, "system", "shear_exponent", config.shear.exponent);

  config.costs = parse_costs(member(root, "config", "costs"));
  if (root.contains("weights")) config.weights = parse_weights(root["weights"]);
  config.bounds = parse_bounds(member(root, "config", "bounds"));
  config.seed.value = root.contains("seed") ? get_u64(root, "config", "seed") : 0;
  config.output_dir = get_string_or(root, "config", "output_dir", "out");

  // Schema is satisfied; now the domain invariants.
  guard("site", [&] { validate(config.site); });
  guard("load", [&] { validate(config.load); });
  for (const auto& [name, spec] : config.pv_modules) {
    guard("catalogs.pv_modules." + name, [&] { validate(spec); });
  }
  for (const auto& [name, spec] : config.wind_turbines) {
    guard("catalogs.wind_turbines." + name, [&] { validate(spec); });
  }
  for (const auto& [name, spec] : config.batteries) {
    guard("catalogs.batteries." + name, [&] { validate(spec); });
  }
  guard("costs", [&] { validate(config.costs); });
  guard("weights", [&] { validate(config.weights); });
  guard("bounds", [&] { validate(config.bounds); });
  guard("system.shear_exponent", [&] { validate(config.shear); });
  if (config.bus_voltage_v <= 0.0) {
    throw ConfigInvariantError("system.bus_voltage_v: must be > 0");
  }
  if (!(config.derate > 0.0 && config.derate <= 1.0)) {
    throw ConfigInvariantError("system.derate: must be in (0, 1]");
  }
  if (config.pv_modules.find(config.pv_module) == config.pv_modules.end()) {
    throw ConfigInvariantError("system.pv_module: unknown catalog entry '" +
                               config.pv_module + "'");
  }
  if (config.wind_turbines.find(config.wind_turbine) ==
      config.wind_turbines.end()) {
    throw ConfigInvariantError("system.wind_turbine: unknown catalog entry '" +
                               config.wind_turbine + "'");
  }
  if (config.batteries.find(config.battery) == config.batteries.end()) {
    throw ConfigInvariantError("system.battery: unknown catalog entry '" +
                               config.battery + "'");
  }
  guard("system.battery", [&] {
    derive_battery_series_count(selected_battery(config),
                                config.bus_voltage_v);
  });
  return config;
}

ordered_json component_cost_json(const ComponentCost& cost) {
  return ordered_json{{"capital", cost.capital},
                      {"replacement", cost.replacement},
                      {"om_annual", cost.om_annual},
                      {"lifetime_yr", cost.lifetime_yr}};
}

}  // namespace

RunConfig parse_run_config_text(const std::string& text,
                                const std::string& source_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigSyntaxError(source_name + ": " + e.what());
  }
  return parse_root(root, source_name);
}

RunConfig parse_run_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw ConfigFileError("cannot read config file: " + file.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw ConfigFileError("error reading config file: " + file.string());
  }
  return parse_run_config_text(buffer.str(), file.string());
}

std::string serialize_run_config(const RunConfig& config) {
  ordered_json root;
  root["site"] = {
      {"latitude_deg", config.site.latitude_deg},
      {"longitude_deg", config.site.longitude_deg},
      {"anemometer_height_m", config.site.anemometer_height_m},
      {"monthly_mean_wind_ms", config.site.monthly_mean_wind_ms},
      {"monthly_mean_temp_c", config.site.monthly_mean_temp_c},
      {"monthly_mean_irradiation_kwh_m2_day",
       config.site.monthly_mean_irradiation_kwh_m2_day},
  };
  root["load"] = {{"description", config.load.description},
                  {"hourly_wh", config.load.hourly_wh}};
  ordered_json pvs = ordered_json::object();
  for (const auto& [name, spec] : config.pv_modules) {
    pvs[name] = {{"rated_power_w", spec.rated_power_w},
                 {"v_oc", spec.v_oc},
                 {"i_sc", spec.i_sc},
                 {"v_mp", spec.v_mp},
                 {"i_mp", spec.i_mp},
                 {"alpha_i", spec.alpha_i},
                 {"beta_v", spec.beta_v},
                 {"noct_c", spec.noct_c},
                 {"nominal_voltage_v", spec.nominal_voltage_v}};
  }
  ordered_json wts = ordered_json::object();
  for (const auto& [name, spec] : config.wind_turbines) {
    wts[name] = {{"rated_power_w", spec.rated_power_w},
                 {"v_cut_in", spec.v_cut_in},
                 {"v_rated", spec.v_rated},
                 {"v_cut_out", spec.v_cut_out},
                 {"hub_height_m", spec.hub_height_m}};
  }
  ordered_json bats = ordered_json::object();
  for (const auto& [name, spec] : config.batteries) {
    bats[name] = {{"nominal_voltage_v", spec.nominal_voltage_v},
                  {"capacity_ah", spec.capacity_ah},
                  {"charge_efficiency", spec.charge_efficiency},
                  {"discharge_efficiency", spec.discharge_efficiency},
                  {"self_discharge_hourly", spec.self_discharge_hourly},
                  {"soc_min", spec.soc_min},
                  {"soc_max", spec.soc_max}};
  }
  root["catalogs"] = {{"pv_modules", pvs},
                      {"wind_turbines", wts},
                      {"batteries", bats}};
  root["system"] = {{"pv_module", config.pv_module},
                    {"wind_turbine", config.wind_turbine},
                    {"battery", config.battery},
                    {"bus_voltage_v", config.bus_voltage_v},
                    {"derate", config.derate},
                    {"shear_exponent", config.shear.exponent}};
  root["costs"] = {
      {"pv_per_watt", component_cost_json(config.costs.pv_per_watt)},
      {"wind_turbine_unit",
       component_cost_json(config.costs.wind_turbine_unit)},
      {"battery_unit", component_cost_json(config.costs.battery_unit)},
      {"balance_of_system",
       component_cost_json(config.costs.balance_of_system)},
      {"project_lifetime_yr", config.costs.project_lifetime_yr},
      {"discount_rate", config.costs.discount_rate}};
  root["weights"] = {
      {"w_reliability", config.weights.w_reliability},
      {"w_luec", config.weights.w_luec},
      {"luec_normalizer", config.weights.luec_normalizer},
      {"form", config.weights.form == ObjectiveForm::reliability_luec
                   ? "reliability_luec"
                   : "lpsp_luec"}};
  root["bounds"] = {{"n_pv_parallel_max", config.bounds.n_pv_parallel_max},
                    {"n_wt_max", config.bounds.n_wt_max},
                    {"n_bat_parallel_max", config.bounds.n_bat_parallel_max},
                    {"lpsp_target", config.bounds.lpsp_target}};
  root["seed"] = config.seed.value;
  root["output_dir"] = config.output_dir;
  return root.dump(2) + "\n";
}

const PVModuleSpec& selected_pv(const RunConfig& config) {
  const auto it = config.pv_modules.find(config.pv_module);
  if (it == config.pv_modules.end()) {
    throw ConfigInvariantError("system.pv_module: unknown catalog entry '" +
                               config.pv_module + "'");
  }
  return it->second;
}

const WindTurbineSpec& selected_wt(const RunConfig& config) {
  const auto it = config.wind_turbines.find(config.wind_turbine);
  if (it == config.wind_turbines.end()) {
    throw ConfigInvariantError("system.wind_turbine: unknown catalog entry '" +
                               config.wind_turbine + "'");
  }
  return it->second;
}

const BatterySpec& selected_battery(const RunConfig& config) {
  const auto it = config.batteries.find(config.battery);
  if (it == config.batteries.end()) {
    throw ConfigInvariantError("system.battery: unknown catalog entry '" +
                               config.battery + "'");
  }
  return it->second;
}

SystemConfiguration make_system_configuration(const RunConfig& config,
                                              int n_pv_parallel, int n_wt,
                                              int n_bat_parallel) {
  SystemConfiguration sc;
  sc.pv = selected_pv(config);
  sc.wt = selected_wt(config);
  sc.bat = selected_battery(config);
  sc.bus_voltage_v = config.bus_voltage_v;
  sc.derate = config.derate;
  sc.n_pv_series = derive_pv_series_count(sc.pv, config.bus_voltage_v);
  sc.n_pv_parallel = n_pv_parallel;
  sc.n_wt = n_wt;
  sc.n_bat_series = derive_battery_series_count(sc.bat, config.bus_voltage_v);
  sc.n_bat_parallel = n_bat_parallel;
  validate(sc);
  return sc;
}

OptimizationProblem make_problem(const RunConfig& config) {
  OptimizationProblem problem;
  problem.site = config.site;
  problem.load = config.load;
  problem.pv = selected_pv(config);
  problem.wt = selected_wt(config);
  problem.bat = selected_battery(config);
  problem.costs = config.costs;
  problem.weights = config.weights;
  problem.bounds = config.bounds;
  problem.bus_voltage_v = config.bus_voltage_v;
  problem.shear = config.shear;
  problem.derate = config.derate;
  problem.seed = config.seed;
  return problem;
}

}  // namespace hswps
