#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hswps/economics.hpp"
#include "support.hpp"

using namespace hswps;
using test::simple_battery;
using test::simple_pv;
using test::simple_turbine;

namespace {

SimulationResult toy_result(const std::vector<double>& loads,
                            const std::vector<double>& deficits,
                            double pv_each = 0.0, double wt_each = 0.0,
                            double waste_each = 0.0) {
  SimulationResult r;
  for (size_t i = 0; i < loads.size(); ++i) {
    HourlyEnergyRecord rec;
    rec.hour = static_cast<int>(i);
    rec.e_load_wh = loads[i];
    rec.e_deficit_wh = deficits[i];
    rec.e_pv_wh = pv_each;
    rec.e_wt_wh = wt_each;
    rec.e_waste_wh = waste_each;
    r.records.push_back(rec);
    r.totals.e_load_wh += loads[i];
    r.totals.e_deficit_wh += deficits[i];
    r.totals.e_pv_wh += pv_each;
    r.totals.e_wt_wh += wt_each;
    r.totals.e_waste_wh += waste_each;
  }
  return r;
}

SystemConfiguration make_config(int n_pv_parallel = 2, int n_wt = 1,
                                int n_bat_parallel = 3) {
  SystemConfiguration c;
  c.pv = simple_pv(100.0, 12.0);
  c.n_pv_series = 1;
  c.n_pv_parallel = n_pv_parallel;
  c.wt = simple_turbine();
  c.n_wt = n_wt;
  c.bat = simple_battery(12.0, 100.0);
  c.n_bat_series = 1;
  c.n_bat_parallel = n_bat_parallel;
  c.bus_voltage_v = 12.0;
  return c;
}

CostModel zeroed_costs(int project_yr, double discount) {
  CostModel costs;
  costs.pv_per_watt = {0.0, 0.0, 0.0, 1};
  costs.wind_turbine_unit = {0.0, 0.0, 0.0, 1};
  costs.battery_unit = {0.0, 0.0, 0.0, 1};
  costs.balance_of_system = {0.0, 0.0, 0.0, 1};
  costs.project_lifetime_yr = project_yr;
  costs.discount_rate = discount;
  return costs;
}

}  // namespace

TEST_SUITE("economics") {

TEST_CASE("capital recovery factor matches the closed form") {
  CHECK(capital_recovery_factor(0.0, 10) == 0.1);
  CHECK(capital_recovery_factor(0.0, 25) == 1.0 / 25.0);
  CHECK(capital_recovery_factor(0.08, 20) ==
        doctest::Approx(0.101852).epsilon(1e-5));
  CHECK_THROWS_AS(capital_recovery_factor(0.08, 0), std::invalid_argument);
  CHECK_THROWS_AS(capital_recovery_factor(-0.01, 10), std::invalid_argument);
}

TEST_CASE("reliability metrics summarize deficits against load") {
  const SimulationResult perfect =
      toy_result({100.0, 100.0, 100.0}, {0.0, 0.0, 0.0}, 50.0, 60.0, 10.0);
  ReliabilityMetrics m = compute_reliability(perfect);
  CHECK(m.lpsp == 0.0);
  CHECK(m.reliability == 1.0);
  CHECK(m.renewable_contribution == 1.0);
  CHECK(m.excess_fraction == doctest::Approx(30.0 / 330.0).epsilon(1e-12));

  const SimulationResult dead =
      toy_result({100.0, 100.0}, {100.0, 100.0});
  m = compute_reliability(dead);
  CHECK(m.lpsp == 1.0);
  CHECK(m.reliability == 0.0);
  CHECK(m.renewable_contribution == 0.0);
  // No generation at all: the excess fraction is defined as zero.
  CHECK(m.excess_fraction == 0.0);

  const SimulationResult partial =
      toy_result({100.0, 100.0, 100.0}, {0.0, 30.0, 0.0});
  m = compute_reliability(partial);
  CHECK(m.lpsp == 0.1);
  CHECK(m.reliability == 0.9);
  CHECK(m.renewable_contribution == 0.9);

  CHECK_THROWS_AS(compute_reliability(toy_result({0.0}, {0.0})),
                  std::invalid_argument);
}

TEST_CASE("reliability and lpsp always sum to one") {
  for (double deficit : {0.0, 10.0, 33.0, 50.0, 99.0, 100.0}) {
    const ReliabilityMetrics m =
        compute_reliability(toy_result({100.0}, {deficit}));
    CHECK(m.reliability + m.lpsp == 1.0);
    CHECK(m.lpsp >= 0.0);
    CHECK(m.lpsp <= 1.0);
  }
}

TEST_CASE("npc degenerates to the capital sum without discounting") {
  const SystemConfiguration c = make_config(2, 1, 3);
  CostModel costs = zeroed_costs(25, 0.0);
  costs.pv_per_watt.capital = 2.0;          // x 200 W array
  costs.pv_per_watt.lifetime_yr = 25;
  costs.wind_turbine_unit.capital = 2500.0;
  costs.wind_turbine_unit.lifetime_yr = 25;
  costs.battery_unit.capital = 180.0;       // x 3 units
  costs.battery_unit.lifetime_yr = 25;
  costs.balance_of_system.capital = 3000.0;
  costs.balance_of_system.lifetime_yr = 25;
  CHECK(compute_npc(c, costs) == 400.0 + 2500.0 + 540.0 + 3000.0);
}

TEST_CASE("npc discounts yearly operation and maintenance") {
  CostModel costs = zeroed_costs(3, 0.10);
  costs.balance_of_system = {100.0, 0.0, 10.0, 25};
  const double expected = 100.0 + 10.0 / 1.1 + 10.0 / 1.21 + 10.0 / 1.331;
  CHECK(compute_npc(make_config(), costs) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(compute_npc(make_config(), costs) ==
        doctest::Approx(124.87).epsilon(1e-4));
}

TEST_CASE("replacements fall on lifetime multiples strictly inside the project") {
  SystemConfiguration c = make_config(1, 1, 1);

  CostModel costs = zeroed_costs(25, 0.0);
  costs.battery_unit = {0.0, 100.0, 0.0, 6};
  // 6, 12, 18, 24: four replacements before year 25.
  CHECK(compute_npc(c, costs) == 400.0);

  costs.battery_unit.lifetime_yr = 5;
  // 5, 10, 15, 20: the year-25 replacement is excluded.
  CHECK(compute_npc(c, costs) == 400.0);

  costs.battery_unit.lifetime_yr = 25;
  CHECK(compute_npc(c, costs) == 0.0);

  costs = zeroed_costs(25, 0.10);
  costs.battery_unit = {0.0, 100.0, 0.0, 10};
  const double expected =
      100.0 / std::pow(1.1, 10) + 100.0 / std::pow(1.1, 20);
  CHECK(compute_npc(c, costs) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("npc without discounting or replacement is capital plus lifetime o&m") {
  const SystemConfiguration c = make_config(2, 2, 2);
  CostModel costs = zeroed_costs(20, 0.0);
  costs.pv_per_watt = {1.5, 1.5, 0.01, 20};
  costs.wind_turbine_unit = {2500.0, 2500.0, 75.0, 20};
  costs.battery_unit = {180.0, 180.0, 2.0, 20};
  costs.balance_of_system = {3000.0, 3000.0, 100.0, 20};
  const double pv_w = pv_array_rated_w(c);
  const double expected = (1.5 + 20 * 0.01) * pv_w +
                          (2500.0 + 20 * 75.0) * c.n_wt +
                          (180.0 + 20 * 2.0) * battery_unit_count(c) +
                          (3000.0 + 20 * 100.0);
  CHECK(compute_npc(c, costs) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("luec divides the annualized cost by energy served") {
  CostModel costs = zeroed_costs(10, 0.0);
  EconomicMetrics econ = compute_luec(1000.0, 500.0, costs);
  CHECK(econ.annualized_cost == 100.0);
  CHECK(econ.luec == 0.2);

  costs = zeroed_costs(20, 0.08);
  econ = compute_luec(1000.0, 500.0, costs);
  CHECK(econ.luec == doctest::Approx(0.2037).epsilon(1e-4));

  CHECK_THROWS_AS(compute_luec(1000.0, 0.0, costs), std::invalid_argument);
  CHECK_THROWS_AS(compute_luec(-1.0, 500.0, costs), std::invalid_argument);
}

TEST_CASE("energy served is load minus deficit in kilowatt-hours") {
  AnnualTotals totals;
  totals.e_load_wh = 8760000.0;
  totals.e_deficit_wh = 760000.0;
  CHECK(annual_energy_served_kwh(totals) == 8000.0);
}

TEST_CASE("doubling every cost doubles the economics exactly") {
  const SystemConfiguration c = make_config(3, 2, 4);
  CostModel costs = zeroed_costs(25, 0.08);
  costs.pv_per_watt = {1.5, 1.2, 0.01, 25};
  costs.wind_turbine_unit = {2500.0, 2000.0, 75.0, 20};
  costs.battery_unit = {180.0, 180.0, 2.0, 6};
  costs.balance_of_system = {3000.0, 0.0, 100.0, 25};

  CostModel doubled = costs;
  for (ComponentCost* cc :
       {&doubled.pv_per_watt, &doubled.wind_turbine_unit, &doubled.battery_unit,
        &doubled.balance_of_system}) {
    cc->capital *= 2.0;
    cc->replacement *= 2.0;
    cc->om_annual *= 2.0;
  }

  const double npc = compute_npc(c, costs);
  CHECK(compute_npc(c, doubled) == 2.0 * npc);
  const EconomicMetrics base = compute_luec(npc, 12345.0, costs);
  const EconomicMetrics twice = compute_luec(2.0 * npc, 12345.0, doubled);
  CHECK(twice.annualized_cost == 2.0 * base.annualized_cost);
  CHECK(twice.luec == 2.0 * base.luec);
}

TEST_CASE("the cost function blends lpsp with normalized luec") {
  ObjectiveWeights w;
  ReliabilityMetrics m;
  EconomicMetrics e;
  CHECK(cost_function(m, e, w) == 0.0);

  m.lpsp = 0.2;
  m.reliability = 0.8;
  e.luec = 0.9;
  CHECK(cost_function(m, e, w) == doctest::Approx(0.55).epsilon(1e-12));

  w.w_reliability = 1.0;
  w.w_luec = 0.0;
  CHECK(cost_function(m, e, w) == doctest::Approx(0.2).epsilon(1e-12));

  w = ObjectiveWeights{};
  w.luec_normalizer = 2.0;
  CHECK(cost_function(m, e, w) ==
        doctest::Approx(0.5 * 0.2 + 0.5 * 0.45).epsilon(1e-12));
}

TEST_CASE("the compatibility form rewards reliability instead") {
  ObjectiveWeights w;
  w.form = ObjectiveForm::reliability_luec;
  ReliabilityMetrics m;
  m.lpsp = 0.2;
  m.reliability = 0.8;
  EconomicMetrics e;
  e.luec = 0.9;
  CHECK(cost_function(m, e, w) == doctest::Approx(0.85).epsilon(1e-12));
}

TEST_CASE("the cost function never improves when lpsp or luec worsen") {
  const ObjectiveWeights w;
  ReliabilityMetrics m;
  m.lpsp = 0.2;
  m.reliability = 0.8;
  EconomicMetrics e;
  e.luec = 0.9;
  const double base = cost_function(m, e, w);
  ReliabilityMetrics worse_m = m;
  worse_m.lpsp = 0.3;
  worse_m.reliability = 0.7;
  CHECK(cost_function(worse_m, e, w) > base);
  EconomicMetrics worse_e = e;
  worse_e.luec = 1.1;
  CHECK(cost_function(m, worse_e, w) > base);
}

TEST_CASE("weight validation rejects inconsistent weights") {
  ObjectiveWeights w;
  w.w_reliability = 0.6;
  w.w_luec = 0.6;
  CHECK_THROWS_AS(validate(w), std::invalid_argument);
  w = ObjectiveWeights{};
  w.luec_normalizer = 0.0;
  CHECK_THROWS_AS(validate(w), std::invalid_argument);
  w = ObjectiveWeights{};
  w.w_reliability = -0.2;
  w.w_luec = 1.2;
  CHECK_THROWS_AS(validate(w), std::invalid_argument);

  CostModel costs = zeroed_costs(25, 0.08);
  costs.discount_rate = -0.1;
  CHECK_THROWS_AS(validate(costs), std::invalid_argument);
  costs = zeroed_costs(0, 0.08);
  CHECK_THROWS_AS(validate(costs), std::invalid_argument);
}

}  // TEST_SUITE
