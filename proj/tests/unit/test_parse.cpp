#include "doctest.h"

#include "fbh/parse.hpp"

using namespace fbh;

TEST_SUITE("parse") {
  TEST_CASE("examples") {
    auto F5 = Field::make(5);
    auto f = parse_poly("x0^4+x1^4+x2^4+x3^4", F5);
    CHECK(f.nvars() == 4);
    CHECK(f.size() == 4);
    auto F4 = Field::make(2, 2);
    auto g = parse_poly("x0^3+x1^3+x2^3+t*x0*x1*x2", F4);
    CHECK(g.coefficient(std::vector<int>{1, 1, 1}).to_string() == "t");
  }

  TEST_CASE("syntax errors carry the column") {
    auto F = Field::make(5);
    try {
      parse_poly("x0^^2", F);
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 4);
      CHECK(std::string(e.what()).find("column 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("x0+y", F), ParseError);
    CHECK_THROWS_AS(parse_poly("", F), ParseError);
    CHECK_THROWS_AS(parse_poly("(x0+x1", F), ParseError);
    CHECK_THROWS_AS(parse_poly("t*x0", F), ParseError);
    CHECK_THROWS_AS(parse_poly("x0^5000", F), std::overflow_error);
  }

  TEST_CASE("print and parse round trip") {
    auto F = Field::make(3, 2);
    for (const char* s : {"x0^4+2*x0*x1^3+(t+1)*x2^2*x3^2", "t*x0^3-x1^3+x2^3", "(x0+t*x1)^3"}) {
      auto f = parse_poly(s, F, 4);
      CHECK(parse_poly(f.to_string(), F, 4) == f);
    }
  }

  TEST_CASE("field elements") {
    auto F = Field::make(2, 3);
    CHECK(parse_field_element("t^3", F).to_string() == "t+1");
    CHECK(parse_field_element("7", Field::make(5)).to_string() == "2");
    CHECK_THROWS(parse_field_element("x0", F));
  }
}
