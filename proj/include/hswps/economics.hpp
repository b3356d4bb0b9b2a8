#pragma once

#include "hswps/dispatch.hpp"

namespace hswps {

// Annual service quality derived from simulation totals.
struct ReliabilityMetrics {
  double lpsp = 0.0;                    // unmet load / total load
  double reliability = 1.0;             // 1 - lpsp
  double excess_fraction = 0.0;         // wasted / generated
  double renewable_contribution = 1.0;  // served / total load
};

// Life-cycle cost inputs for one component class. Values are per unit of
// the class basis: per W of PV array, per turbine, per battery, or a lump.
struct ComponentCost {
  double capital = 0.0;
  double replacement = 0.0;
  double om_annual = 0.0;
  int lifetime_yr = 1;  // replacement interval
};

struct CostModel {
  ComponentCost pv_per_watt;
  ComponentCost wind_turbine_unit;
  ComponentCost battery_unit;
  ComponentCost balance_of_system;  // fixed, quantity 1
  int project_lifetime_yr = 25;
  double discount_rate = 0.08;  // fraction per year
};

struct EconomicMetrics {
  double npc = 0.0;              // $
  double annualized_cost = 0.0;  // $/yr
  double luec = 0.0;             // $/kWh served
};

enum class ObjectiveForm {
  // Weighted LPSP plus normalized LUEC; lower is better. Default.
  lpsp_luec,
  // Weighted reliability instead of LPSP, kept as a compatibility switch
  // for runs that want the objective stated in reward form.
  reliability_luec,
};

struct ObjectiveWeights {
  double w_reliability = 0.5;
  double w_luec = 0.5;
  double luec_normalizer = 1.0;  // $/kWh scale for the LUEC term
  ObjectiveForm form = ObjectiveForm::lpsp_luec;
};

void validate(const CostModel& costs);
void validate(const ObjectiveWeights& weights);

// CRF(d, N); equals 1/N at d = 0.
double capital_recovery_factor(double discount_rate, int years);

ReliabilityMetrics compute_reliability(const SimulationResult& result);

// Discounted capital + replacement + O&M over the project lifetime.
double compute_npc(const SystemConfiguration& config, const CostModel& costs);

double annual_energy_served_kwh(const AnnualTotals& totals);

EconomicMetrics compute_luec(double npc, double annual_energy_served_kwh,
                             const CostModel& costs);

double cost_function(const ReliabilityMetrics& metrics,
                     const EconomicMetrics& econ,
                     const ObjectiveWeights& weights);

}  // namespace hswps
