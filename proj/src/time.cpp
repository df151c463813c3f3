#include "reskit/time.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace reskit {

namespace {

bool read_digits(std::string_view s, std::size_t& pos, int count, long long& out) {
  long long v = 0;
  for (int i = 0; i < count; ++i) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  out = v;
  return true;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c) return false;
  ++pos;
  return true;
}

}  // namespace

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  // Howard Hinnant's algorithm, shifted so the era starts in March.
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = doy - (153 * mp + 2) / 5 + 1;
  month = mp + (mp < 10 ? 3 : -9);
  year = static_cast<int>(y + (month <= 2));
}

std::optional<ParsedStamp> parse_timestamp(std::string_view s) {
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  std::size_t pos = 0;
  long long year, month, day, hour, minute;
  if (!read_digits(s, pos, 4, year)) return std::nullopt;
  if (!expect(s, pos, '-')) return std::nullopt;
  if (!read_digits(s, pos, 2, month)) return std::nullopt;
  if (!expect(s, pos, '-')) return std::nullopt;
  if (!read_digits(s, pos, 2, day)) return std::nullopt;
  if (pos >= s.size() || (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ')) return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, hour)) return std::nullopt;
  if (!expect(s, pos, ':')) return std::nullopt;
  if (!read_digits(s, pos, 2, minute)) return std::nullopt;

  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59) return std::nullopt;

  bool truncated = false;
  if (pos < s.size() && s[pos] == ':') {
    ++pos;
    long long sec;
    if (!read_digits(s, pos, 2, sec)) return std::nullopt;
    if (sec > 60) return std::nullopt;
    if (sec != 0) truncated = true;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      bool any = false;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (s[pos] != '0') truncated = true;
        ++pos;
        any = true;
      }
      if (!any) return std::nullopt;
    }
  }

  long long offset_min = 0;  // local-time offset to subtract
  if (pos < s.size()) {
    const char c = s[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      ++pos;
      long long oh, om = 0;
      if (!read_digits(s, pos, 2, oh)) return std::nullopt;
      if (pos < s.size() && s[pos] == ':') ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (!read_digits(s, pos, 2, om)) return std::nullopt;
      }
      offset_min = oh * 60 + om;
      if (c == '-') offset_min = -offset_min;
    } else {
      return std::nullopt;
    }
  }
  if (pos != s.size()) return std::nullopt;

  const std::int64_t days = days_from_civil(static_cast<int>(year), static_cast<unsigned>(month),
                                            static_cast<unsigned>(day));
  ParsedStamp result;
  result.minutes = days * 1440 + hour * 60 + minute - offset_min;
  result.truncated_seconds = truncated;
  return result;
}

std::string format_timestamp(Minutes minutes) {
  std::int64_t days = minutes / 1440;
  std::int64_t rem = minutes % 1440;
  if (rem < 0) {
    rem += 1440;
    --days;
  }
  int year;
  unsigned month, day;
  civil_from_days(days, year, month, day);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lldZ", year, month, day,
                static_cast<long long>(rem / 60), static_cast<long long>(rem % 60));
  return buf;
}

std::string format_timestamp(double minutes) {
  const double floor_min = std::floor(minutes);
  const double frac = minutes - floor_min;
  const Minutes whole = static_cast<Minutes>(floor_min);
  if (frac == 0.0) return format_timestamp(whole);
  std::string base = format_timestamp(whole);
  base.pop_back();  // strip 'Z'
  char buf[24];
  std::snprintf(buf, sizeof buf, ":%09.6fZ", frac * 60.0);
  return base + buf;
}

}  // namespace reskit
