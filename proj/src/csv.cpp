#include "hswps/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hswps {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  // Binary keeps line endings byte-stable across platforms.
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  return out;
}

void finish(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

std::string csv_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

void write_weather_csv(std::ostream& out, const WeatherYear& weather) {
  out << "hour,wind_ms,temp_c,ghi_wm2\n";
  for (std::size_t h = 0; h < weather.wind_ms.values.size(); ++h) {
    out << h << ',' << csv_double(weather.wind_ms.values[h]) << ','
        << csv_double(weather.temp_c.values[h]) << ','
        << csv_double(weather.ghi_wm2.values[h]) << '\n';
  }
}

void write_weather_csv(const std::filesystem::path& path,
                       const WeatherYear& weather) {
  std::ofstream out = open_output(path);
  write_weather_csv(out, weather);
  finish(out, path);
}

void write_simulation_csv(std::ostream& out, const SimulationResult& result) {
  out << "hour,e_pv_wh,e_wt_wh,e_load_wh,e_charge_wh,e_discharge_wh,"
         "e_deficit_wh,e_waste_wh,soc\n";
  for (const HourlyEnergyRecord& rec : result.records) {
    out << rec.hour << ',' << csv_double(rec.e_pv_wh) << ','
        << csv_double(rec.e_wt_wh) << ',' << csv_double(rec.e_load_wh) << ','
        << csv_double(rec.e_charge_wh) << ','
        << csv_double(rec.e_discharge_wh) << ','
        << csv_double(rec.e_deficit_wh) << ',' << csv_double(rec.e_waste_wh)
        << ',' << csv_double(rec.soc) << '\n';
  }
}

void write_simulation_csv(const std::filesystem::path& path,
                          const SimulationResult& result) {
  std::ofstream out = open_output(path);
  write_simulation_csv(out, result);
  finish(out, path);
}

void write_optimization_csv(std::ostream& out,
                            const std::vector<EvaluationRecord>& records) {
  out << "n_pv_parallel,n_wt,n_bat_parallel,pv_kw,wt_kw,bat_ah,lpsp,"
         "reliability,excess_fraction,npc_usd,luec_usd_per_kwh,cf,feasible\n";
  for (const EvaluationRecord& rec : records) {
    out << rec.config.n_pv_parallel << ',' << rec.config.n_wt << ','
        << rec.config.n_bat_parallel << ','
        << csv_double(pv_array_rated_w(rec.config) / 1000.0) << ','
        << csv_double(wt_array_rated_w(rec.config) / 1000.0) << ','
        << csv_double(battery_bank_ah(rec.config)) << ','
        << csv_double(rec.reliability.lpsp) << ','
        << csv_double(rec.reliability.reliability) << ','
        << csv_double(rec.reliability.excess_fraction) << ','
        << csv_double(rec.econ.npc) << ',' << csv_double(rec.econ.luec) << ','
        << csv_double(rec.cf) << ',' << (rec.feasible ? 1 : 0) << '\n';
  }
}

void write_optimization_csv(const std::filesystem::path& path,
                            const std::vector<EvaluationRecord>& records) {
  std::ofstream out = open_output(path);
  write_optimization_csv(out, records);
  finish(out, path);
}

}  // namespace hswps
