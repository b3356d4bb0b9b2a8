#pragma once

#include <string>
#include <vector>

#include "hswps/components.hpp"
#include "hswps/weather.hpp"

// One year of hourly direct-mode energy balance: generation serves the
// load first, surplus charges the battery then dumps, deficit discharges
// the battery then counts as loss of power supply.

namespace hswps {

struct BatterySpec {
  std::string name;
  double nominal_voltage_v = 0.0;      // per unit
  double capacity_ah = 0.0;            // per unit
  double charge_efficiency = 0.85;     // fraction (0, 1]
  double discharge_efficiency = 1.0;   // fraction (0, 1]
  double self_discharge_hourly = 0.0;  // fraction [0, 1) per hour
  double soc_min = 0.3;                // fraction [0, 1)
  double soc_max = 1.0;                // fraction (soc_min, 1]
};

void validate(const BatterySpec& spec);

// A candidate system: catalog specs plus string counts and electrical
// layout. Battery series count must realize the bus voltage exactly; PV
// series count must reach at least the bus voltage.
struct SystemConfiguration {
  PVModuleSpec pv;
  int n_pv_series = 1;
  int n_pv_parallel = 1;
  WindTurbineSpec wt;
  int n_wt = 1;
  BatterySpec bat;
  int n_bat_series = 1;
  int n_bat_parallel = 1;
  double bus_voltage_v = 48.0;
  double derate = 1.0;  // system-level derate applied to all generation
};

void validate(const SystemConfiguration& config);

// Array-level conveniences.
double pv_array_rated_w(const SystemConfiguration& config);
double wt_array_rated_w(const SystemConfiguration& config);
int battery_unit_count(const SystemConfiguration& config);
double battery_bank_ah(const SystemConfiguration& config);

// Smallest series count whose summed nominal voltage reaches the bus.
int derive_pv_series_count(const PVModuleSpec& pv, double bus_voltage_v);
// Series count that matches the bus voltage exactly; throws otherwise.
int derive_battery_series_count(const BatterySpec& bat, double bus_voltage_v);

// Hourly load in Wh: either a 24-entry daily pattern repeated all year or
// a full 8760-entry series.
struct LoadProfile {
  std::vector<double> hourly_wh;
  std::string description;

  double at(int hour) const {
    return hourly_wh.size() == static_cast<size_t>(kHoursPerDay)
               ? hourly_wh[hour % kHoursPerDay]
               : hourly_wh[hour];
  }
};

void validate(const LoadProfile& load);
double annual_load_wh(const LoadProfile& load);

// Two-level telecom-style day: full load inside [full_start_hour,
// full_end_hour) (wrapping past midnight when start > end), half level
// otherwise.
LoadProfile two_level_load(double full_wh, double half_wh, int full_start_hour,
                           int full_end_hour, std::string description);

// Default assumed telecom pattern: 750 W full load 06:00-24:00, 375 W
// standby overnight.
LoadProfile default_telecom_load();

struct HourlyEnergyRecord {
  int hour = 0;
  double e_pv_wh = 0.0;
  double e_wt_wh = 0.0;
  double e_load_wh = 0.0;
  double e_charge_wh = 0.0;     // into the battery, after charge efficiency
  double e_discharge_wh = 0.0;  // delivered to the load
  double e_deficit_wh = 0.0;    // unserved
  double e_waste_wh = 0.0;      // dumped
  double soc = 0.0;             // at end of hour
};

struct AnnualTotals {
  double e_pv_wh = 0.0;
  double e_wt_wh = 0.0;
  double e_load_wh = 0.0;
  double e_charge_wh = 0.0;
  double e_discharge_wh = 0.0;
  double e_deficit_wh = 0.0;
  double e_waste_wh = 0.0;
};

struct SimulationResult {
  std::vector<HourlyEnergyRecord> records;
  AnnualTotals totals;
  std::vector<double> soc_trace;
};

// Wh capacity of the whole bank: n_series * V * n_parallel * Ah.
double battery_capacity_wh(const BatterySpec& spec, int n_series, int n_parallel);

struct BatteryStep {
  double soc = 0.0;
  double charged_wh = 0.0;
  double discharged_wh = 0.0;
  double waste_wh = 0.0;
  double deficit_wh = 0.0;
};

// One hour of battery bookkeeping. Self-discharge is applied first; a
// positive net charges (surplus beyond storable is wasted), a negative net
// discharges (shortfall beyond the usable window is deficit). The returned
// SOC is clamped to [soc_min, soc_max].
BatteryStep step_battery(double soc, double net_wh, double capacity_wh,
                         const BatterySpec& spec);

// Simulate one year. Initial SOC is soc_max. Pure function of its inputs;
// hours are strictly sequential because of the battery state.
SimulationResult simulate_year(const SystemConfiguration& config,
                               const WeatherYear& weather,
                               const LoadProfile& load,
                               const ShearModel& shear);

}  // namespace hswps
