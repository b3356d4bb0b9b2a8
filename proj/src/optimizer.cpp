#include "hswps/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

namespace hswps {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::tuple<int, int, int> count_key(const EvaluationRecord& r) {
  return {r.config.n_pv_parallel, r.config.n_wt, r.config.n_bat_parallel};
}

// Infeasible-by-implication row: costs are known, service metrics are not.
EvaluationRecord unevaluated_record(const SystemConfiguration& config,
                                    const CostModel& costs) {
  EvaluationRecord rec;
  rec.config = config;
  rec.reliability = {kNan, kNan, kNan, kNan};
  rec.econ.npc = compute_npc(config, costs);
  rec.econ.annualized_cost =
      rec.econ.npc * capital_recovery_factor(costs.discount_rate,
                                             costs.project_lifetime_yr);
  rec.econ.luec = kNan;
  rec.cf = kNan;
  rec.feasible = false;
  rec.evaluated = false;
  return rec;
}

}  // namespace

void validate(const SearchBounds& bounds) {
  require(bounds.n_pv_parallel_max >= 1, "n_pv_parallel_max must be >= 1");
  require(bounds.n_wt_max >= 1, "n_wt_max must be >= 1");
  require(bounds.n_bat_parallel_max >= 1, "n_bat_parallel_max must be >= 1");
  require(bounds.lpsp_target >= 0.0 && bounds.lpsp_target <= 1.0,
          "lpsp_target must be in [0, 1]");
}

std::vector<SystemConfiguration> enumerate_configurations(
    const PVModuleSpec& pv, const WindTurbineSpec& wt, const BatterySpec& bat,
    const SearchBounds& bounds, double bus_voltage_v, double derate) {
  validate(bounds);
  SystemConfiguration base;
  base.pv = pv;
  base.wt = wt;
  base.bat = bat;
  base.bus_voltage_v = bus_voltage_v;
  base.derate = derate;
  base.n_pv_series = derive_pv_series_count(pv, bus_voltage_v);
  base.n_bat_series = derive_battery_series_count(bat, bus_voltage_v);

  std::vector<SystemConfiguration> configs;
  configs.reserve(static_cast<std::size_t>(bounds.n_pv_parallel_max) *
                  bounds.n_wt_max * bounds.n_bat_parallel_max);
  for (int p = 1; p <= bounds.n_pv_parallel_max; ++p) {
    for (int w = 1; w <= bounds.n_wt_max; ++w) {
      for (int b = 1; b <= bounds.n_bat_parallel_max; ++b) {
        SystemConfiguration config = base;
        config.n_pv_parallel = p;
        config.n_wt = w;
        config.n_bat_parallel = b;
        configs.push_back(config);
      }
    }
  }
  validate(configs.front());
  return configs;
}

bool record_order(const EvaluationRecord& a, const EvaluationRecord& b) {
  if (a.feasible != b.feasible) return a.feasible;
  const double cf_a = std::isnan(a.cf) ? kInf : a.cf;
  const double cf_b = std::isnan(b.cf) ? kInf : b.cf;
  if (cf_a != cf_b) return cf_a < cf_b;
  return count_key(a) < count_key(b);
}

EvaluationRecord evaluate_configuration(const SystemConfiguration& config,
                                        const WeatherYear& weather,
                                        const LoadProfile& load,
                                        const ShearModel& shear,
                                        const CostModel& costs,
                                        const ObjectiveWeights& weights,
                                        double lpsp_target) {
  EvaluationRecord rec;
  rec.config = config;
  const SimulationResult sim = simulate_year(config, weather, load, shear);
  rec.reliability = compute_reliability(sim);
  const double npc = compute_npc(config, costs);
  const double served_kwh = annual_energy_served_kwh(sim.totals);
  if (served_kwh > 0.0) {
    rec.econ = compute_luec(npc, served_kwh, costs);
    rec.cf = cost_function(rec.reliability, rec.econ, weights);
  } else {
    // Serves nothing: unit cost is undefined, rank behind everything.
    rec.econ.npc = npc;
    rec.econ.annualized_cost =
        npc * capital_recovery_factor(costs.discount_rate,
                                      costs.project_lifetime_yr);
    rec.econ.luec = kInf;
    rec.cf = kInf;
  }
  rec.feasible = rec.reliability.lpsp <= lpsp_target;
  rec.evaluated = true;
  return rec;
}

std::vector<EvaluationRecord> pareto_front(
    const std::vector<EvaluationRecord>& records) {
  require(!records.empty(), "pareto_front: records must be non-empty");
  std::vector<EvaluationRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const EvaluationRecord& a, const EvaluationRecord& b) {
                     if (a.reliability.lpsp != b.reliability.lpsp)
                       return a.reliability.lpsp < b.reliability.lpsp;
                     return a.econ.luec < b.econ.luec;
                   });

  std::vector<EvaluationRecord> front;
  double best_luec_before = kInf;  // min luec over strictly smaller lpsp
  std::size_t i = 0;
  while (i < sorted.size()) {
    // One group of equal lpsp at a time; only its luec minimum survives,
    // and only if no cheaper record exists at smaller lpsp.
    std::size_t j = i;
    while (j < sorted.size() &&
           sorted[j].reliability.lpsp == sorted[i].reliability.lpsp) {
      ++j;
    }
    const double group_min = sorted[i].econ.luec;
    // front.empty() keeps the all-infinite-luec edge from dropping rows.
    if (group_min < best_luec_before || front.empty()) {
      for (std::size_t k = i; k < j; ++k) {
        if (sorted[k].econ.luec == group_min) front.push_back(sorted[k]);
      }
      best_luec_before = group_min;
    }
    i = j;
  }
  return front;
}

OptimizationReport optimize(const OptimizationProblem& problem,
                            const OptimizeOptions& options) {
  validate(problem.site);
  validate(problem.load);
  validate(problem.costs);
  validate(problem.weights);
  validate(problem.bounds);
  validate(problem.shear);
  require(options.workers >= 1, "workers must be >= 1");

  const std::vector<SystemConfiguration> configs = enumerate_configurations(
      problem.pv, problem.wt, problem.bat, problem.bounds,
      problem.bus_voltage_v, problem.derate);
  const WeatherYear weather = synthesize_weather(problem.site, problem.seed);

  // Fewer batteries at the same PV and turbine counts never lowers lpsp,
  // but soc-proportional self-discharge can break that, so prune only
  // applies without it.
  const bool prune =
      options.prune && problem.bat.self_discharge_hourly == 0.0;
  const int bat_span = problem.bounds.n_bat_parallel_max;
  const std::size_t n_tasks =
      prune ? configs.size() / bat_span : configs.size();

  std::vector<EvaluationRecord> records(configs.size());
  const auto evaluate = [&](std::size_t idx) {
    records[idx] =
        evaluate_configuration(configs[idx], weather, problem.load,
                               problem.shear, problem.costs, problem.weights,
                               problem.bounds.lpsp_target);
  };
  // With pruning, one task is a full battery column at fixed (pv, wt),
  // walked from the largest bank down; the first infeasible result settles
  // the rest of the column. Without it, one task is one configuration.
  const auto run_task = [&](std::size_t task) {
    if (!prune) {
      evaluate(task);
      return;
    }
    const std::size_t base = task * bat_span;
    bool column_settled = false;
    for (int j = bat_span - 1; j >= 0; --j) {
      const std::size_t idx = base + j;
      if (column_settled) {
        records[idx] = unevaluated_record(configs[idx], problem.costs);
      } else {
        evaluate(idx);
        column_settled = !records[idx].feasible;
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_workers = std::min<std::size_t>(
      {static_cast<std::size_t>(options.workers), n_tasks,
       static_cast<std::size_t>(hw) * 4});
  if (n_workers <= 1) {
    for (std::size_t task = 0; task < n_tasks; ++task) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t task = next.fetch_add(1);
          if (task >= n_tasks) return;
          try {
            run_task(task);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  OptimizationReport report;
  std::vector<EvaluationRecord> evaluated;
  evaluated.reserve(records.size());
  for (const EvaluationRecord& rec : records) {
    if (rec.evaluated) evaluated.push_back(rec);
  }
  report.all_records = std::move(records);
  std::sort(report.all_records.begin(), report.all_records.end(),
            record_order);
  if (!report.all_records.empty() && report.all_records.front().feasible) {
    report.best = report.all_records.front();
  }
  if (!evaluated.empty()) report.pareto = pareto_front(evaluated);
  return report;
}

}  // namespace hswps
