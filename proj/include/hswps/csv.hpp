#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "hswps/dispatch.hpp"
#include "hswps/optimizer.hpp"
#include "hswps/weather.hpp"

namespace hswps {

// Shortest round-trippable-enough decimal: %.10g, byte-stable per input.
std::string csv_double(double value);

// header `hour,wind_ms,temp_c,ghi_wm2`, 8760 rows
void write_weather_csv(std::ostream& out, const WeatherYear& weather);
void write_weather_csv(const std::filesystem::path& path,
                       const WeatherYear& weather);

// header `hour,e_pv_wh,...,e_waste_wh,soc`, 8760 rows
void write_simulation_csv(std::ostream& out, const SimulationResult& result);
void write_simulation_csv(const std::filesystem::path& path,
                          const SimulationResult& result);

// One row per record, in the order given (pass a ranked table for reports).
void write_optimization_csv(std::ostream& out,
                            const std::vector<EvaluationRecord>& records);
void write_optimization_csv(const std::filesystem::path& path,
                            const std::vector<EvaluationRecord>& records);

}  // namespace hswps
