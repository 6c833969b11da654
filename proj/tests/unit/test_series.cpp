#include "doctest.h"
#include "support.hpp"

#include "fbh/series.hpp"

using namespace fbh;

TEST_SUITE("series") {
  TEST_CASE("inverse") {
    auto F = Field::make(5);
    auto x = Series2::x(F, 8), y = Series2::y(F, 8);
    auto u = Series2::constant(F, 8, 1) + x + y.scaled(3) + x * y;
    auto prod = u * u.inverse();
    CHECK(prod == Series2::constant(F, 8, 1));
  }

  TEST_CASE("composition") {
    auto F = Field::make(7);
    auto x = Series2::x(F, 6), y = Series2::y(F, 6);
    auto G = x + y + x * y;
    auto t = Series1::variable(F, 6);
    auto s = G.compose(t, t);
    // (1+t)^2 - 1 = 2t + t^2.
    CHECK(s[1] == 2);
    CHECK(s[2] == 1);
    CHECK(s[3] == 0);
    CHECK(G.swapped() == G);
    CHECK(G.restrict_x() == t);
  }

  TEST_CASE("printing") {
    auto F = Field::make(3);
    auto t = Series1::variable(F, 4);
    CHECK((t * t + t.scaled(2)).to_string() == "2*t+t^2+O(t^5)");
  }
}
