#pragma once

#include <array>

// Fixed 365-day year layout. Hour 0 is January 1, 00:00 local solar time;
// no leap years, no DST. All series produced or consumed by this library
// use this indexing.

namespace hswps {

inline constexpr int kMonthsPerYear = 12;
inline constexpr int kHoursPerDay = 24;
inline constexpr int kDaysPerYear = 365;
inline constexpr int kHoursPerYear = kDaysPerYear * kHoursPerDay;  // 8760

inline constexpr std::array<int, kMonthsPerYear> kDaysInMonth = {
    31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

// First hour index of each month, plus a sentinel end entry.
constexpr std::array<int, kMonthsPerYear + 1> month_start_hours() {
  std::array<int, kMonthsPerYear + 1> starts{};
  int h = 0;
  for (int m = 0; m < kMonthsPerYear; ++m) {
    starts[m] = h;
    h += kDaysInMonth[m] * kHoursPerDay;
  }
  starts[kMonthsPerYear] = h;
  return starts;
}

inline constexpr std::array<int, kMonthsPerYear + 1> kMonthStartHour =
    month_start_hours();

// Month index (0-11) containing a given hour of the year.
constexpr int month_of_hour(int hour) {
  int m = 0;
  while (m + 1 < kMonthsPerYear && hour >= kMonthStartHour[m + 1]) ++m;
  return m;
}

constexpr int hour_of_day(int hour) { return hour % kHoursPerDay; }

// 1-based day of year (1..365) for a given hour of the year.
constexpr int day_of_year(int hour) { return hour / kHoursPerDay + 1; }

}  // namespace hswps
