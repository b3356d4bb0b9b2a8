#pragma once

#include "hswps/dispatch.hpp"
#include "hswps/weather.hpp"

// Shared builders for test fixtures. Values are arbitrary unless a test
// says otherwise; tests that need specific numbers set them explicitly.

namespace hswps::test {

inline MonthlyClimate constant_climate(double wind_ms, double temp_c,
                                       double irr_kwh_m2_day,
                                       double latitude_deg = 27.2) {
  MonthlyClimate c;
  c.monthly_mean_wind_ms.fill(wind_ms);
  c.monthly_mean_temp_c.fill(temp_c);
  c.monthly_mean_irradiation_kwh_m2_day.fill(irr_kwh_m2_day);
  c.anemometer_height_m = 10.0;
  c.latitude_deg = latitude_deg;
  c.longitude_deg = 86.8;
  return c;
}

inline PVModuleSpec simple_pv(double rated_w = 100.0,
                              double nominal_v = 12.0) {
  PVModuleSpec pv;
  pv.name = "test-pv";
  pv.rated_power_w = rated_w;
  pv.v_oc = 22.0;
  pv.v_mp = 20.0;
  pv.i_mp = rated_w / 20.0;
  pv.i_sc = pv.i_mp * 1.2;
  pv.alpha_i = 0.0;
  pv.beta_v = -0.08;
  pv.noct_c = 47.0;
  pv.nominal_voltage_v = nominal_v;
  return pv;
}

inline WindTurbineSpec simple_turbine(double rated_w = 1000.0,
                                      double v_cut_in = 3.0,
                                      double v_rated = 10.0,
                                      double v_cut_out = 25.0,
                                      double hub_m = 10.0) {
  WindTurbineSpec wt;
  wt.name = "test-wt";
  wt.rated_power_w = rated_w;
  wt.v_cut_in = v_cut_in;
  wt.v_rated = v_rated;
  wt.v_cut_out = v_cut_out;
  wt.hub_height_m = hub_m;
  return wt;
}

inline BatterySpec simple_battery(double voltage_v = 12.0,
                                  double capacity_ah = 200.0,
                                  double eta_charge = 0.85,
                                  double eta_discharge = 1.0) {
  BatterySpec bat;
  bat.name = "test-bat";
  bat.nominal_voltage_v = voltage_v;
  bat.capacity_ah = capacity_ah;
  bat.charge_efficiency = eta_charge;
  bat.discharge_efficiency = eta_discharge;
  bat.self_discharge_hourly = 0.0;
  bat.soc_min = 0.3;
  bat.soc_max = 1.0;
  return bat;
}

inline LoadProfile constant_load(double wh_per_hour) {
  LoadProfile load;
  load.description = "constant";
  load.hourly_wh.assign(static_cast<size_t>(kHoursPerDay), wh_per_hour);
  return load;
}

}  // namespace hswps::test
