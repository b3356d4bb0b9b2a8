#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hswps/calendar.hpp"

// Synthetic hourly weather from monthly climate normals. All three
// generators are pure functions of their inputs: the same climate and seed
// reproduce bit-identical series on any platform (mt19937_64 is fully
// specified by the standard and all transforms are written out explicitly
// instead of relying on library distributions).

namespace hswps {

struct RandomSeed {
  std::uint64_t value = 0;
};

enum class SeriesUnit { wind_ms, temp_c, ghi_wm2 };

// One year of hourly values for a single physical quantity.
struct HourlySeries {
  SeriesUnit unit = SeriesUnit::wind_ms;
  std::vector<double> values;  // exactly kHoursPerYear entries
};

// Monthly mean climate for a site; the seed of all synthesis.
struct MonthlyClimate {
  std::array<double, kMonthsPerYear> monthly_mean_wind_ms{};  // at anemometer height
  double anemometer_height_m = 10.0;
  std::array<double, kMonthsPerYear> monthly_mean_temp_c{};
  std::array<double, kMonthsPerYear> monthly_mean_irradiation_kwh_m2_day{};
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
};

// Throws std::invalid_argument naming the offending field.
void validate(const MonthlyClimate& climate);

// Deterministic diurnal temperature shape:
//   T(h) = monthly_mean + amplitude * cos(2*pi*(hour_of_day - peak_hour)/24)
// plus a zero-mean Gaussian residual with the given standard deviation.
struct TemperatureShape {
  double diurnal_amplitude_c = 5.0;
  double peak_hour = 15.0;
  double residual_sigma_c = 1.5;
};

// Substream indices. Each quantity draws from its own generator derived
// from the master seed, so adding a stream never perturbs the others.
inline constexpr std::uint32_t kWindStream = 0;
inline constexpr std::uint32_t kTemperatureStream = 1;
inline constexpr std::uint32_t kIrradianceStream = 2;  // reserved; synthesis is deterministic

// SplitMix64 step; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Seed for substream `stream` of a master seed.
std::uint64_t substream_seed(RandomSeed master, std::uint32_t stream);

// Uniform draw in [0, 1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

// Cosine of the solar zenith angle at the site latitude for a given
// 1-based day of year and local solar hour (0..24). Negative values mean
// the sun is below the horizon.
double cos_solar_zenith(double latitude_deg, int day, double solar_hour);

// Hourly wind speed at anemometer height: independent Rayleigh draws per
// month with scale sigma_m = monthly_mean / sqrt(pi/2), sampled by inverse
// CDF: v = sigma * sqrt(-2 ln(1 - u)).
HourlySeries synthesize_wind(const MonthlyClimate& climate, RandomSeed seed);

// Hourly ambient temperature: diurnal cosine around the monthly mean plus
// Gaussian residual (Box-Muller from the temperature substream).
HourlySeries synthesize_temperature(const MonthlyClimate& climate, RandomSeed seed,
                                    const TemperatureShape& shape = {});

// Hourly global horizontal irradiance in W/m^2: clear-sky cosine-of-zenith
// shape, rescaled month by month so the mean daily integral equals the
// monthly mean irradiation exactly. Deterministic; night hours are 0.
HourlySeries synthesize_irradiance(const MonthlyClimate& climate);

// The three series plus the height the wind series was generated at.
struct WeatherYear {
  HourlySeries wind_ms;
  HourlySeries temp_c;
  HourlySeries ghi_wm2;
  double anemometer_height_m = 10.0;
};

WeatherYear synthesize_weather(const MonthlyClimate& climate, RandomSeed seed,
                               const TemperatureShape& shape = {});

}  // namespace hswps
