// Load-curve data model: validation, smoothing, normalization and period
// slicing.
#pragma once

#include <string>
#include <vector>

#include "loadshape/date.hpp"
#include "loadshape/error.hpp"
#include "loadshape/types.hpp"

namespace loadshape {

// One household-day of 24 hourly energy readings (kWh).
struct LoadCurve {
  std::string household_id;
  Date date;
  DayType day_type = DayType::Weekday;
  HourlyVector values = HourlyVector::Zero();

  std::string key() const { return household_id + "/" + date.to_iso(); }
};

// Dimensionless shape whose entries sum to one.
struct NormalizedCurve {
  Vector values;
};

// One of n_p equal contiguous blocks of a day; period indices are 0-based.
struct PeriodSlice {
  int period = 0;
  Vector values;
};

struct CurveMeta {
  std::string household_id;
  Date date;
};

// Checks the load-curve invariants: exactly 24 samples, finite, non-negative
// and not identically zero.
LoadCurve validate_curve(const std::vector<double>& raw, const CurveMeta& meta);

// Replaces the hourly readings with values of a natural cubic smoothing
// spline fitted to them; smoothing = 0 reproduces the input exactly.
// Output is clamped at zero.
LoadCurve smooth_spline(const LoadCurve& curve, double smoothing);

NormalizedCurve normalize(const LoadCurve& curve);

// Normalizes an arbitrary-length slice to sum one.
Vector normalize_values(const Vector& values);

// Splits the 24 hours into n_p equal contiguous slices. n_p must divide 24.
std::vector<PeriodSlice> split_periods(const LoadCurve& curve, int n_periods);

}  // namespace loadshape
