#include <array>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hswps/config.hpp"
#include "hswps/csv.hpp"
#include "hswps/economics.hpp"
#include "hswps/optimizer.hpp"
#include "hswps/weather.hpp"

namespace {

// Exit codes: 0 success, 1 usage or parse error, 2 invariant violation,
// 3 no feasible configuration.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitInfeasible = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliArgs {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir;
  bool out_given = false;
  int workers = 1;
  bool prune = false;
  std::string override_counts = "1,1,1";
};

std::array<int, 3> parse_counts(const std::string& text) {
  std::array<int, 3> counts{};
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d,%d,%d%c", &counts[0], &counts[1],
                  &counts[2], &extra) != 3) {
    throw UsageError("--config-override expects \"n_pv,n_wt,n_bat\", got \"" +
                     text + "\"");
  }
  return counts;
}

void print_metric(const char* key, double value) {
  std::cout << key << ' ' << hswps::csv_double(value) << '\n';
}

void print_config_line(const hswps::SystemConfiguration& config) {
  std::cout << "configuration: pv " << config.pv.name << " "
            << config.n_pv_series << "s x " << config.n_pv_parallel
            << "p, wt " << config.wt.name << " x " << config.n_wt << ", bat "
            << config.bat.name << " " << config.n_bat_series << "s x "
            << config.n_bat_parallel << "p, bus "
            << hswps::csv_double(config.bus_voltage_v) << " V\n";
  print_metric("pv_kw", hswps::pv_array_rated_w(config) / 1000.0);
  print_metric("wt_kw", hswps::wt_array_rated_w(config) / 1000.0);
  print_metric("bat_ah", hswps::battery_bank_ah(config));
}

int run_synth(const hswps::RunConfig& config,
              const std::filesystem::path& out_dir) {
  const hswps::WeatherYear weather =
      hswps::synthesize_weather(config.site, config.seed);
  const std::filesystem::path path = out_dir / "weather.csv";
  hswps::write_weather_csv(path, weather);
  std::cout << "wrote " << path.string() << '\n';
  return kExitOk;
}

int run_simulate(const hswps::RunConfig& config,
                 const std::filesystem::path& out_dir,
                 const std::array<int, 3>& counts) {
  const hswps::SystemConfiguration system = hswps::make_system_configuration(
      config, counts[0], counts[1], counts[2]);
  const hswps::WeatherYear weather =
      hswps::synthesize_weather(config.site, config.seed);
  const hswps::SimulationResult result =
      hswps::simulate_year(system, weather, config.load, config.shear);

  const std::filesystem::path path = out_dir / "simulation.csv";
  hswps::write_simulation_csv(path, result);

  const hswps::ReliabilityMetrics reliability =
      hswps::compute_reliability(result);
  const double npc = hswps::compute_npc(system, config.costs);
  const double served = hswps::annual_energy_served_kwh(result.totals);

  print_config_line(system);
  print_metric("lpsp", reliability.lpsp);
  print_metric("reliability", reliability.reliability);
  print_metric("excess_fraction", reliability.excess_fraction);
  print_metric("renewable_contribution", reliability.renewable_contribution);
  print_metric("annual_load_kwh", result.totals.e_load_wh / 1000.0);
  print_metric("annual_served_kwh", served);
  print_metric("annual_pv_kwh", result.totals.e_pv_wh / 1000.0);
  print_metric("annual_wt_kwh", result.totals.e_wt_wh / 1000.0);
  print_metric("npc_usd", npc);
  if (served > 0.0) {
    const hswps::EconomicMetrics econ =
        hswps::compute_luec(npc, served, config.costs);
    print_metric("annualized_cost_usd_per_yr", econ.annualized_cost);
    print_metric("luec_usd_per_kwh", econ.luec);
    print_metric("cf", hswps::cost_function(reliability, econ, config.weights));
  } else {
    std::cout << "luec_usd_per_kwh undefined (nothing served)\n";
  }
  std::cout << "wrote " << path.string() << '\n';
  return kExitOk;
}

int run_optimize(const hswps::RunConfig& config,
                 const std::filesystem::path& out_dir, int workers,
                 bool prune) {
  hswps::OptimizationProblem problem = hswps::make_problem(config);
  hswps::OptimizeOptions options;
  options.workers = workers;
  options.prune = prune;
  const hswps::OptimizationReport report = hswps::optimize(problem, options);

  const std::filesystem::path table_path = out_dir / "optimization.csv";
  hswps::write_optimization_csv(table_path, report.all_records);
  const std::filesystem::path pareto_path = out_dir / "pareto.csv";
  hswps::write_optimization_csv(pareto_path, report.pareto);

  std::size_t skipped = 0;
  for (const hswps::EvaluationRecord& rec : report.all_records) {
    if (!rec.evaluated) ++skipped;
  }
  std::cout << "evaluated " << (report.all_records.size() - skipped) << " of "
            << report.all_records.size() << " configurations";
  if (skipped > 0) std::cout << " (" << skipped << " pruned)";
  std::cout << '\n';

  const int status = report.best ? kExitOk : kExitInfeasible;
  if (report.best) {
    std::cout << "best ";
    print_config_line(report.best->config);
    print_metric("lpsp", report.best->reliability.lpsp);
    print_metric("reliability", report.best->reliability.reliability);
    print_metric("excess_fraction", report.best->reliability.excess_fraction);
    print_metric("npc_usd", report.best->econ.npc);
    print_metric("luec_usd_per_kwh", report.best->econ.luec);
    print_metric("cf", report.best->cf);
  } else {
    std::cout << "no feasible configuration\n";
  }
  std::cout << "wrote " << table_path.string() << '\n';
  std::cout << "wrote " << pareto_path.string() << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CliArgs args;
  CLI::App app{"Stand-alone hybrid PV/wind/battery sizing engine"};
  app.fallthrough(true);
  app.require_subcommand(1);
  app.add_option("--config", args.config_path,
                 "run configuration JSON file")
      ->required();
  app.add_option("--seed", args.seed, "override the configured random seed");
  app.add_option("--workers", args.workers,
                 "parallel evaluation workers (optimize)");
  app.add_option("--out", args.out_dir, "override the configured output dir");

  CLI::App* synth =
      app.add_subcommand("synth", "synthesize hourly weather, write CSV");
  CLI::App* simulate = app.add_subcommand(
      "simulate", "simulate one configuration for a year, write CSV");
  simulate->add_option("--config-override", args.override_counts,
                       "counts as n_pv,n_wt,n_bat (default 1,1,1)");
  CLI::App* optimize = app.add_subcommand(
      "optimize", "enumerate and rank all configurations, write CSV");
  optimize->add_flag("--prune", args.prune,
                     "skip battery columns settled infeasible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  args.seed_given = app.count("--seed") > 0;
  args.out_given = app.count("--out") > 0;

  try {
    hswps::RunConfig config = hswps::parse_run_config(args.config_path);
    if (args.seed_given) config.seed.value = args.seed;
    const std::filesystem::path out_dir =
        args.out_given ? args.out_dir : config.output_dir;
    if (args.workers < 1) {
      throw UsageError("--workers must be >= 1");
    }
    if (synth->parsed()) {
      return run_synth(config, out_dir);
    }
    if (simulate->parsed()) {
      return run_simulate(config, out_dir, parse_counts(args.override_counts));
    }
    return run_optimize(config, out_dir, args.workers, args.prune);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hswps::ConfigInvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const hswps::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
