#include "hswps/economics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hswps {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate_component(const ComponentCost& c, const std::string& name) {
  require(c.capital >= 0.0, name + ": capital must be >= 0");
  require(c.replacement >= 0.0, name + ": replacement must be >= 0");
  require(c.om_annual >= 0.0, name + ": om_annual must be >= 0");
  require(c.lifetime_yr > 0, name + ": lifetime_yr must be > 0");
}

// Present cost of one component class: capital now, a replacement at each
// whole lifetime strictly inside the project, O&M at the end of every year.
double present_cost(const ComponentCost& c, double quantity, int project_yr,
                    double d) {
  double total = c.capital;
  for (int t = c.lifetime_yr; t < project_yr; t += c.lifetime_yr) {
    total += c.replacement / std::pow(1.0 + d, t);
  }
  for (int t = 1; t <= project_yr; ++t) {
    total += c.om_annual / std::pow(1.0 + d, t);
  }
  return total * quantity;
}

}  // namespace

void validate(const CostModel& costs) {
  validate_component(costs.pv_per_watt, "pv_per_watt");
  validate_component(costs.wind_turbine_unit, "wind_turbine_unit");
  validate_component(costs.battery_unit, "battery_unit");
  validate_component(costs.balance_of_system, "balance_of_system");
  require(costs.project_lifetime_yr > 0, "project_lifetime_yr must be > 0");
  require(costs.discount_rate >= 0.0, "discount_rate must be >= 0");
}

void validate(const ObjectiveWeights& weights) {
  require(weights.w_reliability >= 0.0 && weights.w_luec >= 0.0,
          "objective weights must be >= 0");
  require(std::abs(weights.w_reliability + weights.w_luec - 1.0) <= 1e-9,
          "objective weights must sum to 1");
  require(weights.luec_normalizer > 0.0, "luec_normalizer must be > 0");
}

double capital_recovery_factor(double discount_rate, int years) {
  require(years > 0, "capital_recovery_factor: years must be > 0");
  require(discount_rate >= 0.0,
          "capital_recovery_factor: discount_rate must be >= 0");
  if (discount_rate == 0.0) {
    return 1.0 / years;
  }
  const double growth = std::pow(1.0 + discount_rate, years);
  return discount_rate * growth / (growth - 1.0);
}

ReliabilityMetrics compute_reliability(const SimulationResult& result) {
  const AnnualTotals& t = result.totals;
  require(t.e_load_wh > 0.0, "compute_reliability: total load must be > 0");
  ReliabilityMetrics m;
  m.lpsp = t.e_deficit_wh / t.e_load_wh;
  m.reliability = 1.0 - m.lpsp;
  const double generated = t.e_pv_wh + t.e_wt_wh;
  // Waste never exceeds generation, so zero generation means zero waste.
  m.excess_fraction = generated > 0.0 ? t.e_waste_wh / generated : 0.0;
  m.renewable_contribution = (t.e_load_wh - t.e_deficit_wh) / t.e_load_wh;
  return m;
}

double compute_npc(const SystemConfiguration& config, const CostModel& costs) {
  validate(config);
  validate(costs);
  const int n = costs.project_lifetime_yr;
  const double d = costs.discount_rate;
  double npc = 0.0;
  npc += present_cost(costs.pv_per_watt, pv_array_rated_w(config), n, d);
  npc += present_cost(costs.wind_turbine_unit, config.n_wt, n, d);
  npc += present_cost(costs.battery_unit, battery_unit_count(config), n, d);
  npc += present_cost(costs.balance_of_system, 1.0, n, d);
  return npc;
}

double annual_energy_served_kwh(const AnnualTotals& totals) {
  return (totals.e_load_wh - totals.e_deficit_wh) / 1000.0;
}

EconomicMetrics compute_luec(double npc, double annual_energy_served_kwh,
                             const CostModel& costs) {
  validate(costs);
  require(npc >= 0.0, "compute_luec: npc must be >= 0");
  require(annual_energy_served_kwh > 0.0,
          "compute_luec: annual energy served must be > 0");
  EconomicMetrics econ;
  econ.npc = npc;
  econ.annualized_cost = npc * capital_recovery_factor(
                                   costs.discount_rate,
                                   costs.project_lifetime_yr);
  econ.luec = econ.annualized_cost / annual_energy_served_kwh;
  return econ;
}

double cost_function(const ReliabilityMetrics& metrics,
                     const EconomicMetrics& econ,
                     const ObjectiveWeights& weights) {
  validate(weights);
  const double luec_term = econ.luec / weights.luec_normalizer;
  if (weights.form == ObjectiveForm::reliability_luec) {
    return weights.w_reliability * metrics.reliability +
           weights.w_luec * luec_term;
  }
  return weights.w_reliability * metrics.lpsp + weights.w_luec * luec_term;
}

}  // namespace hswps
