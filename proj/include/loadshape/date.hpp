#pragma once

#include <compare>
#include <string>

namespace loadshape {

enum class DayType { Weekday, Weekend };

const char* to_string(DayType t);

// Calendar date. Parsing/formatting is ISO-8601 (YYYY-MM-DD) only.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  static Date parse(const std::string& iso);
  std::string to_iso() const;
  Date next_day() const;
  DayType day_type() const;  // Saturday/Sunday -> Weekend
};

}  // namespace loadshape
