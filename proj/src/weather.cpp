#include "hswps/weather.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hswps {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void validate(const MonthlyClimate& climate) {
  for (int m = 0; m < kMonthsPerYear; ++m) {
    require(climate.monthly_mean_wind_ms[m] >= 0.0,
            "monthly_mean_wind_ms[" + std::to_string(m) + "] must be >= 0");
    require(climate.monthly_mean_irradiation_kwh_m2_day[m] >= 0.0,
            "monthly_mean_irradiation_kwh_m2_day[" + std::to_string(m) +
                "] must be >= 0");
    require(std::isfinite(climate.monthly_mean_temp_c[m]),
            "monthly_mean_temp_c[" + std::to_string(m) + "] must be finite");
  }
  require(climate.anemometer_height_m > 0.0, "anemometer_height_m must be > 0");
  require(climate.latitude_deg >= -90.0 && climate.latitude_deg <= 90.0,
          "latitude_deg must be in [-90, 90]");
  require(climate.longitude_deg >= -180.0 && climate.longitude_deg <= 180.0,
          "longitude_deg must be in [-180, 180]");
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(RandomSeed master, std::uint32_t stream) {
  std::uint64_t state = master.value;
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i <= stream; ++i) out = splitmix64(state);
  return out;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double cos_solar_zenith(double latitude_deg, int day, double solar_hour) {
  const double lat = latitude_deg * kPi / 180.0;
  // Cooper's declination formula.
  const double decl =
      (23.45 * kPi / 180.0) * std::sin(2.0 * kPi * (284.0 + day) / 365.0);
  const double hour_angle = (solar_hour - 12.0) * (15.0 * kPi / 180.0);
  return std::sin(lat) * std::sin(decl) +
         std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
}

HourlySeries synthesize_wind(const MonthlyClimate& climate, RandomSeed seed) {
  validate(climate);
  std::mt19937_64 rng(substream_seed(seed, kWindStream));
  HourlySeries series{SeriesUnit::wind_ms, std::vector<double>(kHoursPerYear)};
  for (int m = 0; m < kMonthsPerYear; ++m) {
    // E[v] = sigma * sqrt(pi/2)  =>  sigma = mean * sqrt(2/pi)
    const double sigma = climate.monthly_mean_wind_ms[m] * std::sqrt(2.0 / kPi);
    for (int h = kMonthStartHour[m]; h < kMonthStartHour[m + 1]; ++h) {
      const double u = uniform01(rng);
      series.values[h] = sigma * std::sqrt(-2.0 * std::log1p(-u));
    }
  }
  return series;
}

HourlySeries synthesize_temperature(const MonthlyClimate& climate, RandomSeed seed,
                                    const TemperatureShape& shape) {
  validate(climate);
  require(shape.residual_sigma_c >= 0.0, "residual_sigma_c must be >= 0");
  std::mt19937_64 rng(substream_seed(seed, kTemperatureStream));
  HourlySeries series{SeriesUnit::temp_c, std::vector<double>(kHoursPerYear)};
  for (int m = 0; m < kMonthsPerYear; ++m) {
    const double mean = climate.monthly_mean_temp_c[m];
    for (int h = kMonthStartHour[m]; h < kMonthStartHour[m + 1]; ++h) {
      const double diurnal =
          shape.diurnal_amplitude_c *
          std::cos(2.0 * kPi * (hour_of_day(h) - shape.peak_hour) / kHoursPerDay);
      // Box-Muller; one normal per pair of uniforms.
      const double u1 = uniform01(rng);
      const double u2 = uniform01(rng);
      const double z =
          std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * kPi * u2);
      series.values[h] = mean + diurnal + shape.residual_sigma_c * z;
    }
  }
  return series;
}

HourlySeries synthesize_irradiance(const MonthlyClimate& climate) {
  validate(climate);
  HourlySeries series{SeriesUnit::ghi_wm2, std::vector<double>(kHoursPerYear)};
  for (int m = 0; m < kMonthsPerYear; ++m) {
    // Clear-sky shape for the month, evaluated at hour midpoints.
    double shape_sum = 0.0;
    for (int h = kMonthStartHour[m]; h < kMonthStartHour[m + 1]; ++h) {
      const double cz = cos_solar_zenith(climate.latitude_deg, day_of_year(h),
                                         hour_of_day(h) + 0.5);
      const double s = cz > 0.0 ? cz : 0.0;
      series.values[h] = s;
      shape_sum += s;
    }
    const double target_wh_m2 = climate.monthly_mean_irradiation_kwh_m2_day[m] *
                                1000.0 * kDaysInMonth[m];
    if (target_wh_m2 == 0.0) {
      for (int h = kMonthStartHour[m]; h < kMonthStartHour[m + 1]; ++h)
        series.values[h] = 0.0;
      continue;
    }
    require(shape_sum > 0.0,
            "monthly_mean_irradiation_kwh_m2_day[" + std::to_string(m) +
                "] > 0 but the site has no daylight in that month");
    const double scale = target_wh_m2 / shape_sum;
    for (int h = kMonthStartHour[m]; h < kMonthStartHour[m + 1]; ++h)
      series.values[h] *= scale;
  }
  return series;
}

WeatherYear synthesize_weather(const MonthlyClimate& climate, RandomSeed seed,
                               const TemperatureShape& shape) {
  WeatherYear year;
  year.wind_ms = synthesize_wind(climate, seed);
  year.temp_c = synthesize_temperature(climate, seed, shape);
  year.ghi_wm2 = synthesize_irradiance(climate);
  year.anemometer_height_m = climate.anemometer_height_m;
  return year;
}

}  // namespace hswps
