#ifndef RESKIT_TIME_HPP
#define RESKIT_TIME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace reskit {

// Timestamps are UTC minutes since the Unix epoch. The source data is
// minute-resolution, so an integer minute count is the native unit.
using Minutes = std::int64_t;

struct ParsedStamp {
  Minutes minutes = 0;
  bool truncated_seconds = false;  // input carried a nonzero seconds field
};

// Accepts ISO-8601 "YYYY-MM-DD{T| }HH:MM[:SS[.frac]][Z|+HH:MM|-HH:MM]".
// Missing zone designators are read as UTC. Seconds are truncated toward
// the containing minute and flagged.
std::optional<ParsedStamp> parse_timestamp(std::string_view text);

// "YYYY-MM-DDTHH:MMZ"
std::string format_timestamp(Minutes minutes);

// Formats a possibly fractional minute count (simulated events carry
// continuous times). Integral values use the minute form above; fractional
// values gain ":SS.ssssss".
std::string format_timestamp(double minutes);

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

}  // namespace reskit

#endif
