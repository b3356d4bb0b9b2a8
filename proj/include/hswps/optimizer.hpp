#pragma once

#include <optional>
#include <vector>

#include "hswps/components.hpp"
#include "hswps/dispatch.hpp"
#include "hswps/economics.hpp"
#include "hswps/weather.hpp"

namespace hswps {

struct SearchBounds {
  int n_pv_parallel_max = 1;
  int n_wt_max = 1;
  int n_bat_parallel_max = 1;
  double lpsp_target = 0.0;  // feasible means lpsp <= lpsp_target
};

void validate(const SearchBounds& bounds);

struct EvaluationRecord {
  SystemConfiguration config;
  ReliabilityMetrics reliability;
  EconomicMetrics econ;
  double cf = 0.0;
  bool feasible = false;
  // False when pruning settled infeasibility without a simulation; the
  // reliability fields, luec, and cf are NaN in that case (npc is not, it
  // depends only on the configuration).
  bool evaluated = true;
};

struct OptimizationReport {
  std::optional<EvaluationRecord> best;
  // Every enumerated configuration, ranked by record_order.
  std::vector<EvaluationRecord> all_records;
  // Non-dominated evaluated records in (lpsp, luec), lpsp ascending.
  std::vector<EvaluationRecord> pareto;
};

// One optimization run: a site, a load, one spec per component class, and
// the search space. Series counts are derived from the bus voltage, so the
// space is the three parallel/unit counts.
struct OptimizationProblem {
  MonthlyClimate site;
  LoadProfile load;
  PVModuleSpec pv;
  WindTurbineSpec wt;
  BatterySpec bat;
  CostModel costs;
  ObjectiveWeights weights;
  SearchBounds bounds;
  double bus_voltage_v = 48.0;
  ShearModel shear;
  double derate = 1.0;
  RandomSeed seed;
};

struct OptimizeOptions {
  int workers = 1;
  // Skip simulating configurations that differ from an already-infeasible
  // one only by having fewer batteries. Never changes the best record or
  // the feasible set; skipped rows are marked unevaluated.
  bool prune = false;
};

// All counts in [1, max], lexicographic over (pv parallel, wt, bat parallel).
std::vector<SystemConfiguration> enumerate_configurations(
    const PVModuleSpec& pv, const WindTurbineSpec& wt, const BatterySpec& bat,
    const SearchBounds& bounds, double bus_voltage_v, double derate = 1.0);

// Report ranking: feasible first, then cf ascending with NaN last, then
// fewer PV modules, turbines, batteries.
bool record_order(const EvaluationRecord& a, const EvaluationRecord& b);

EvaluationRecord evaluate_configuration(const SystemConfiguration& config,
                                        const WeatherYear& weather,
                                        const LoadProfile& load,
                                        const ShearModel& shear,
                                        const CostModel& costs,
                                        const ObjectiveWeights& weights,
                                        double lpsp_target);

std::vector<EvaluationRecord> pareto_front(
    const std::vector<EvaluationRecord>& records);

OptimizationReport optimize(const OptimizationProblem& problem,
                            const OptimizeOptions& options = {});

}  // namespace hswps
