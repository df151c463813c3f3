#include "doctest.h"
#include "reskit/rng.hpp"
#include "reskit/time.hpp"

using namespace reskit;

TEST_CASE("civil date conversion") {
  CHECK(days_from_civil(1970, 1, 1) == 0);
  CHECK(days_from_civil(2020, 1, 1) == 18262);
  CHECK(days_from_civil(2020, 4, 1) == 18262 + 31 + 29 + 31);
  int y;
  unsigned m, d;
  civil_from_days(18262, y, m, d);
  CHECK(y == 2020);
  CHECK(m == 1);
  CHECK(d == 1);
}

TEST_CASE("timestamp parsing") {
  auto ts = parse_timestamp("2020-04-01T00:00Z");
  REQUIRE(ts.has_value());
  CHECK(ts->minutes == (18262 + 91) * 1440LL);
  CHECK_FALSE(ts->truncated_seconds);

  CHECK(parse_timestamp("2020-04-01 06:30")->minutes == ts->minutes + 6 * 60 + 30);
  CHECK(parse_timestamp("2020-04-01T00:00:00Z")->minutes == ts->minutes);
  CHECK_FALSE(parse_timestamp("2020-04-01T00:00:00Z")->truncated_seconds);

  auto trunc = parse_timestamp("2020-04-01T00:00:42Z");
  REQUIRE(trunc.has_value());
  CHECK(trunc->minutes == ts->minutes);
  CHECK(trunc->truncated_seconds);
  CHECK(parse_timestamp("2020-04-01T00:00:00.250Z")->truncated_seconds);

  // zone offsets convert to UTC
  CHECK(parse_timestamp("2020-04-01T02:00+02:00")->minutes == ts->minutes);
  CHECK(parse_timestamp("2020-03-31T19:00-05:00")->minutes == ts->minutes);

  CHECK_FALSE(parse_timestamp("").has_value());
  CHECK_FALSE(parse_timestamp("not a time").has_value());
  CHECK_FALSE(parse_timestamp("2020-13-01T00:00Z").has_value());
  CHECK_FALSE(parse_timestamp("2020-04-01T25:00Z").has_value());
  CHECK_FALSE(parse_timestamp("2020-04-01T00:00Zjunk").has_value());
}

TEST_CASE("timestamp format round trip") {
  CHECK(format_timestamp(Minutes{(18262 + 91) * 1440}) == "2020-04-01T00:00Z");
  SplitMix64 rng(9001);
  for (int i = 0; i < 200; ++i) {
    const Minutes m = static_cast<Minutes>(rng.next() % (80LL * 365 * 1440));
    const auto parsed = parse_timestamp(format_timestamp(m));
    REQUIRE(parsed.has_value());
    CHECK(parsed->minutes == m);
  }
}

TEST_CASE("fractional minutes format") {
  const double base = 18262.0 * 1440.0;
  CHECK(format_timestamp(base) == "2020-01-01T00:00Z");
  CHECK(format_timestamp(base + 0.5) == "2020-01-01T00:00:30.000000Z");
}
