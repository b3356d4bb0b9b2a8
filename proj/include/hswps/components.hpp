#pragma once

#include <string>

// Component power models: PV module output with cell-temperature
// correction, wind turbine output from the piecewise power curve with a
// power-law hub-height adjustment. Pure physics; system derating and
// string wiring live in the dispatch layer.

namespace hswps {

// Datasheet parameters of one PV module.
struct PVModuleSpec {
  std::string name;
  double rated_power_w = 0.0;  // at STC
  double v_oc = 0.0;           // open-circuit voltage, V
  double i_sc = 0.0;           // short-circuit current, A
  double v_mp = 0.0;           // voltage at maximum power point, V
  double i_mp = 0.0;           // current at maximum power point, A
  double alpha_i = 0.0;        // current temperature coefficient, A/degC (>= 0)
  double beta_v = 0.0;         // voltage temperature coefficient, V/degC (<= 0)
  double noct_c = 47.0;        // nominal operating cell temperature, degC
  double nominal_voltage_v = 12.0;  // system-integration voltage class
};

void validate(const PVModuleSpec& spec);

struct WindTurbineSpec {
  std::string name;
  double rated_power_w = 0.0;
  double v_cut_in = 0.0;   // m/s
  double v_rated = 0.0;    // m/s
  double v_cut_out = 0.0;  // m/s
  double hub_height_m = 0.0;
};

void validate(const WindTurbineSpec& spec);

// Power-law wind shear profile: v2 = v1 * (h2/h1)^exponent.
struct ShearModel {
  double exponent = 1.0 / 7.0;
};

void validate(const ShearModel& shear);

// Cell temperature from the NOCT energy balance:
//   T_cell = T_ambient + (NOCT - 20)/800 * G
double pv_cell_temperature(double ambient_c, double irradiance_wm2, double noct_c);

// Maximum-power-point output of one module:
//   I = i_mp * G/1000 + alpha_i * (T_cell - 25)
//   V = v_mp + beta_v * (T_cell - 25)
//   P = max(0, I * V), and exactly 0 when G = 0.
double pv_module_power(const PVModuleSpec& spec, double irradiance_wm2,
                       double ambient_c);

// Anemometer-height wind speed scaled to hub height by the power law.
double adjust_wind_to_hub(double v_ref_ms, double h_ref_m, double h_hub_m,
                          const ShearModel& shear);

// Piecewise power curve with a quadratic (v^2) segment between cut-in and
// rated speed; 0 below cut-in and at or above cut-out (half-open segments).
double wind_turbine_power(const WindTurbineSpec& spec, double v_hub_ms);

}  // namespace hswps
