#include "hswps/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hswps {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Exact-to-rounding comparison for voltage arithmetic on catalog values.
bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

void validate(const BatterySpec& spec) {
  const std::string who = "battery '" + spec.name + "': ";
  require(spec.nominal_voltage_v > 0.0, who + "nominal_voltage_v must be > 0");
  require(spec.capacity_ah > 0.0, who + "capacity_ah must be > 0");
  require(spec.charge_efficiency > 0.0 && spec.charge_efficiency <= 1.0,
          who + "charge_efficiency must be in (0, 1]");
  require(spec.discharge_efficiency > 0.0 && spec.discharge_efficiency <= 1.0,
          who + "discharge_efficiency must be in (0, 1]");
  require(spec.self_discharge_hourly >= 0.0 && spec.self_discharge_hourly < 1.0,
          who + "self_discharge_hourly must be in [0, 1)");
  require(spec.soc_min >= 0.0 && spec.soc_min < 1.0,
          who + "soc_min must be in [0, 1)");
  require(spec.soc_max > spec.soc_min && spec.soc_max <= 1.0,
          who + "soc_max must be in (soc_min, 1]");
}

void validate(const SystemConfiguration& config) {
  validate(config.pv);
  validate(config.wt);
  validate(config.bat);
  require(config.n_pv_series >= 1 && config.n_pv_parallel >= 1 &&
              config.n_wt >= 1 && config.n_bat_series >= 1 &&
              config.n_bat_parallel >= 1,
          "all component counts must be >= 1");
  require(config.bus_voltage_v > 0.0, "bus_voltage_v must be > 0");
  require(nearly_equal(config.n_bat_series * config.bat.nominal_voltage_v,
                       config.bus_voltage_v),
          "n_bat_series * battery nominal voltage must equal the bus voltage");
  require(config.n_pv_series * config.pv.nominal_voltage_v >=
              config.bus_voltage_v * (1.0 - 1e-9),
          "n_pv_series * pv nominal voltage must reach the bus voltage");
  require(config.derate > 0.0 && config.derate <= 1.0,
          "derate must be in (0, 1]");
}

double pv_array_rated_w(const SystemConfiguration& config) {
  return static_cast<double>(config.n_pv_series) * config.n_pv_parallel *
         config.pv.rated_power_w;
}

double wt_array_rated_w(const SystemConfiguration& config) {
  return static_cast<double>(config.n_wt) * config.wt.rated_power_w;
}

int battery_unit_count(const SystemConfiguration& config) {
  return config.n_bat_series * config.n_bat_parallel;
}

double battery_bank_ah(const SystemConfiguration& config) {
  return config.n_bat_parallel * config.bat.capacity_ah;
}

int derive_pv_series_count(const PVModuleSpec& pv, double bus_voltage_v) {
  require(pv.nominal_voltage_v > 0.0 && bus_voltage_v > 0.0,
          "voltages must be > 0");
  const int n = static_cast<int>(
      std::ceil(bus_voltage_v / pv.nominal_voltage_v - 1e-9));
  return std::max(n, 1);
}

int derive_battery_series_count(const BatterySpec& bat, double bus_voltage_v) {
  require(bat.nominal_voltage_v > 0.0 && bus_voltage_v > 0.0,
          "voltages must be > 0");
  const double ratio = bus_voltage_v / bat.nominal_voltage_v;
  const int n = static_cast<int>(std::lround(ratio));
  require(n >= 1 && nearly_equal(n * bat.nominal_voltage_v, bus_voltage_v),
          "battery '" + bat.name + "' (" + std::to_string(bat.nominal_voltage_v) +
              " V) cannot realize the bus voltage exactly");
  return n;
}

void validate(const LoadProfile& load) {
  require(load.hourly_wh.size() == static_cast<size_t>(kHoursPerDay) ||
              load.hourly_wh.size() == static_cast<size_t>(kHoursPerYear),
          "load profile must have 24 or 8760 entries");
  for (size_t i = 0; i < load.hourly_wh.size(); ++i)
    require(load.hourly_wh[i] >= 0.0,
            "load profile entry " + std::to_string(i) + " must be >= 0");
}

double annual_load_wh(const LoadProfile& load) {
  double total = 0.0;
  for (int h = 0; h < kHoursPerYear; ++h) total += load.at(h);
  return total;
}

LoadProfile two_level_load(double full_wh, double half_wh, int full_start_hour,
                           int full_end_hour, std::string description) {
  require(full_wh >= 0.0 && half_wh >= 0.0, "load levels must be >= 0");
  require(full_start_hour >= 0 && full_start_hour <= kHoursPerDay &&
              full_end_hour >= 0 && full_end_hour <= kHoursPerDay,
          "full-load window hours must be in [0, 24]");
  LoadProfile load;
  load.description = std::move(description);
  load.hourly_wh.resize(kHoursPerDay);
  for (int h = 0; h < kHoursPerDay; ++h) {
    const bool in_window = full_start_hour <= full_end_hour
                               ? (h >= full_start_hour && h < full_end_hour)
                               : (h >= full_start_hour || h < full_end_hour);
    load.hourly_wh[h] = in_window ? full_wh : half_wh;
  }
  return load;
}

LoadProfile default_telecom_load() {
  return two_level_load(750.0, 375.0, 6, 24, "telecom 750 W day / 375 W night");
}

double battery_capacity_wh(const BatterySpec& spec, int n_series,
                           int n_parallel) {
  require(n_series >= 1 && n_parallel >= 1, "battery counts must be >= 1");
  return static_cast<double>(n_series) * spec.nominal_voltage_v * n_parallel *
         spec.capacity_ah;
}

BatteryStep step_battery(double soc, double net_wh, double capacity_wh,
                         const BatterySpec& spec) {
  require(capacity_wh > 0.0, "battery capacity must be > 0");
  require(soc >= spec.soc_min - 1e-12 && soc <= spec.soc_max + 1e-12,
          "battery soc outside [soc_min, soc_max]: corrupted state");

  BatteryStep step;
  soc *= 1.0 - spec.self_discharge_hourly;

  if (net_wh > 0.0) {
    const double storable_wh = std::max(0.0, (spec.soc_max - soc) * capacity_wh);
    step.charged_wh = std::min(net_wh * spec.charge_efficiency, storable_wh);
    // max() absorbs the one-ulp negative that (net*eta)/eta can round to.
    step.waste_wh =
        std::max(0.0, net_wh - step.charged_wh / spec.charge_efficiency);
    soc += step.charged_wh / capacity_wh;
  } else if (net_wh < 0.0) {
    const double available_wh =
        std::max(0.0, (soc - spec.soc_min) * capacity_wh) *
        spec.discharge_efficiency;
    step.discharged_wh = std::min(-net_wh, available_wh);
    step.deficit_wh = -net_wh - step.discharged_wh;
    soc -= step.discharged_wh / spec.discharge_efficiency / capacity_wh;
  }

  step.soc = std::clamp(soc, spec.soc_min, spec.soc_max);
  return step;
}

SimulationResult simulate_year(const SystemConfiguration& config,
                               const WeatherYear& weather,
                               const LoadProfile& load,
                               const ShearModel& shear) {
  validate(config);
  validate(load);
  validate(shear);
  require(weather.wind_ms.values.size() == static_cast<size_t>(kHoursPerYear) &&
              weather.temp_c.values.size() == static_cast<size_t>(kHoursPerYear) &&
              weather.ghi_wm2.values.size() == static_cast<size_t>(kHoursPerYear),
          "weather series must have 8760 entries each");

  const double n_pv = static_cast<double>(config.n_pv_series) * config.n_pv_parallel;
  const double capacity_wh =
      battery_capacity_wh(config.bat, config.n_bat_series, config.n_bat_parallel);

  SimulationResult result;
  result.records.resize(kHoursPerYear);
  result.soc_trace.resize(kHoursPerYear);

  double soc = config.bat.soc_max;
  for (int h = 0; h < kHoursPerYear; ++h) {
    HourlyEnergyRecord& rec = result.records[h];
    rec.hour = h;
    rec.e_pv_wh = n_pv *
                  pv_module_power(config.pv, weather.ghi_wm2.values[h],
                                  weather.temp_c.values[h]) *
                  config.derate;
    const double v_hub =
        adjust_wind_to_hub(weather.wind_ms.values[h], weather.anemometer_height_m,
                           config.wt.hub_height_m, shear);
    rec.e_wt_wh = config.n_wt * wind_turbine_power(config.wt, v_hub) * config.derate;
    rec.e_load_wh = load.at(h);

    const double net_wh = rec.e_pv_wh + rec.e_wt_wh - rec.e_load_wh;
    const BatteryStep step = step_battery(soc, net_wh, capacity_wh, config.bat);
    soc = step.soc;
    rec.e_charge_wh = step.charged_wh;
    rec.e_discharge_wh = step.discharged_wh;
    rec.e_deficit_wh = step.deficit_wh;
    rec.e_waste_wh = step.waste_wh;
    rec.soc = soc;
    result.soc_trace[h] = soc;

    result.totals.e_pv_wh += rec.e_pv_wh;
    result.totals.e_wt_wh += rec.e_wt_wh;
    result.totals.e_load_wh += rec.e_load_wh;
    result.totals.e_charge_wh += rec.e_charge_wh;
    result.totals.e_discharge_wh += rec.e_discharge_wh;
    result.totals.e_deficit_wh += rec.e_deficit_wh;
    result.totals.e_waste_wh += rec.e_waste_wh;
  }
  return result;
}

}  // namespace hswps
