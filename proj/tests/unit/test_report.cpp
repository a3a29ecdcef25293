#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qhj/report.hpp"

using namespace qhj::report;

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.13645492859) == "-0.136455");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(0.1, true) == "0.10000000000000001");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_optional(std::nullopt).empty());
  CHECK(format_optional(2.0) == "2");
}

TEST_CASE("csv round trip") {
  Table t{{"family", "params", "R"}, {}};
  t.add_row({"quartic", "a=1", "0.255796"});
  t.add_row({"hydrogen", "e2=1;l=1", ""});
  t.add_row({"odd, \"quoted\"", "line\nbreak", "-1e-07"});
  const std::string text = to_csv(t);
  CHECK(text.substr(0, 16) == "family,params,R\n");
  CHECK(text.find("\"odd, \"\"quoted\"\"\"") != std::string::npos);
  const Table back = parse_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK(to_csv(back) == text);
}

TEST_CASE("csv errors") {
  Table t{{"a", "b"}, {}};
  CHECK_THROWS_AS(t.add_row({"1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a,b\n\"1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a,b\r\n1,2\r\n"), std::invalid_argument);
}
