#include "hswps/components.hpp"

#include <cmath>
#include <stdexcept>

namespace hswps {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void validate(const PVModuleSpec& spec) {
  const std::string who = "pv module '" + spec.name + "': ";
  require(spec.rated_power_w > 0.0, who + "rated_power_w must be > 0");
  require(spec.v_mp > 0.0 && spec.v_mp < spec.v_oc,
          who + "requires 0 < v_mp < v_oc");
  require(spec.i_mp > 0.0 && spec.i_mp < spec.i_sc,
          who + "requires 0 < i_mp < i_sc");
  require(spec.v_mp * spec.i_mp <= spec.rated_power_w * 1.01,
          who + "v_mp * i_mp exceeds rated_power_w by more than 1%");
  require(spec.beta_v <= 0.0, who + "beta_v must be <= 0");
  require(spec.alpha_i >= 0.0, who + "alpha_i must be >= 0");
  require(spec.noct_c >= 40.0 && spec.noct_c <= 60.0,
          who + "noct_c must be in [40, 60]");
  require(spec.nominal_voltage_v > 0.0, who + "nominal_voltage_v must be > 0");
}

void validate(const WindTurbineSpec& spec) {
  const std::string who = "wind turbine '" + spec.name + "': ";
  require(spec.rated_power_w > 0.0, who + "rated_power_w must be > 0");
  require(spec.v_cut_in > 0.0 && spec.v_cut_in < spec.v_rated &&
              spec.v_rated < spec.v_cut_out,
          who + "requires 0 < v_cut_in < v_rated < v_cut_out");
  require(spec.hub_height_m > 0.0, who + "hub_height_m must be > 0");
}

void validate(const ShearModel& shear) {
  require(shear.exponent > 0.0 && shear.exponent < 1.0,
          "shear exponent must be in (0, 1)");
}

double pv_cell_temperature(double ambient_c, double irradiance_wm2,
                           double noct_c) {
  require(irradiance_wm2 >= 0.0, "irradiance must be >= 0");
  return ambient_c + (noct_c - 20.0) / 800.0 * irradiance_wm2;
}

double pv_module_power(const PVModuleSpec& spec, double irradiance_wm2,
                       double ambient_c) {
  require(irradiance_wm2 >= 0.0, "irradiance must be >= 0");
  if (irradiance_wm2 == 0.0) return 0.0;
  const double t_cell = pv_cell_temperature(ambient_c, irradiance_wm2, spec.noct_c);
  const double current = spec.i_mp * (irradiance_wm2 / 1000.0) +
                         spec.alpha_i * (t_cell - 25.0);
  const double voltage = spec.v_mp + spec.beta_v * (t_cell - 25.0);
  const double power = current * voltage;
  return power > 0.0 ? power : 0.0;
}

double adjust_wind_to_hub(double v_ref_ms, double h_ref_m, double h_hub_m,
                          const ShearModel& shear) {
  require(v_ref_ms >= 0.0, "wind speed must be >= 0");
  require(h_ref_m > 0.0 && h_hub_m > 0.0, "heights must be > 0");
  return v_ref_ms * std::pow(h_hub_m / h_ref_m, shear.exponent);
}

double wind_turbine_power(const WindTurbineSpec& spec, double v_hub_ms) {
  require(v_hub_ms >= 0.0, "wind speed must be >= 0");
  if (v_hub_ms < spec.v_cut_in || v_hub_ms >= spec.v_cut_out) return 0.0;
  if (v_hub_ms >= spec.v_rated) return spec.rated_power_w;
  const double v2 = v_hub_ms * v_hub_ms;
  const double ci2 = spec.v_cut_in * spec.v_cut_in;
  const double r2 = spec.v_rated * spec.v_rated;
  return spec.rated_power_w * (v2 - ci2) / (r2 - ci2);
}

}  // namespace hswps
