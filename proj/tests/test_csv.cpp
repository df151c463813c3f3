#include <sstream>

#include "doctest.h"
#include "reskit/csv.hpp"

using namespace reskit;

TEST_CASE("csv reader handles quoting") {
  std::istringstream in("a,b,c\r\n\"x,y\",\"he said \"\"hi\"\"\",\"two\nlines\"\nplain,,\n");
  CsvReader reader(in);
  std::vector<std::string> f;

  REQUIRE(reader.next(f));
  CHECK(f == std::vector<std::string>{"a", "b", "c"});
  CHECK(reader.record_line() == 1);

  REQUIRE(reader.next(f));
  CHECK(f == std::vector<std::string>{"x,y", "he said \"hi\"", "two\nlines"});
  CHECK(reader.record_line() == 2);

  REQUIRE(reader.next(f));
  CHECK(f == std::vector<std::string>{"plain", "", ""});
  CHECK(reader.record_line() == 4);

  CHECK_FALSE(reader.next(f));
}

TEST_CASE("csv escape round trip") {
  const std::vector<std::string> row = {"plain", "with,comma", "with\"quote", "with\nnewline", ""};
  std::ostringstream out;
  write_csv_row(out, row);
  std::istringstream in(out.str());
  CsvReader reader(in);
  std::vector<std::string> f;
  REQUIRE(reader.next(f));
  CHECK(f == row);
}

TEST_CASE("last record without trailing newline") {
  std::istringstream in("a,b\n1,2");
  CsvReader reader(in);
  std::vector<std::string> f;
  REQUIRE(reader.next(f));
  REQUIRE(reader.next(f));
  CHECK(f == std::vector<std::string>{"1", "2"});
  CHECK_FALSE(reader.next(f));
}
