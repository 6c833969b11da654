#include "doctest.h"

#include "fbh/intpoly.hpp"

using namespace fbh;

TEST_SUITE("intpoly") {
  TEST_CASE("exact division examples") {
    auto X = IntPoly::variable(2, 0), Y = IntPoly::variable(2, 1);
    CHECK((X.scaled(2) + Y.scaled(4)).divexact(2) == X + Y.scaled(2));
    CHECK(((X + Y).pow(2) - X.pow(2) - Y.pow(2)).divexact(2) == X * Y);
    CHECK(((X + Y).pow(3) - X.pow(3) - Y.pow(3)).divexact(3) == X.pow(2) * Y + X * Y.pow(2));
    CHECK_THROWS_AS((X + Y).divexact(2), std::domain_error);
  }

  TEST_CASE("serialization round trip") {
    auto X = IntPoly::variable(3, 0), Z = IntPoly::variable(3, 2);
    auto f = (X.scaled(mpz_class("123456789012345678901234567890")) - Z).pow(3);
    CHECK(IntPoly::deserialize(f.serialize()) == f);
  }
}
