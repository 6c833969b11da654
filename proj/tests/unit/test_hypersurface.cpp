#include "doctest.h"

#include "fbh/hypersurface.hpp"
#include "fbh/parse.hpp"

using namespace fbh;

TEST_SUITE("hypersurface") {
  TEST_CASE("accepted inputs") {
    auto X = Hypersurface::make(parse_poly("x0^4+x1^4+x2^4+x3^4", Field::make(5)));
    CHECK(X.dim() == 2);
    CHECK(X.normalization().empty());
    auto E = Hypersurface::make(parse_poly("x0^3+x1^3+x2^3", Field::make(2)));
    CHECK(E.dim() == 1);
    auto Q = Hypersurface::make(parse_poly("x0^5+x1^5+x2^5+x3^5+x4^5", Field::make(2)));
    CHECK(Q.dim() == 3);
  }

  TEST_CASE("rejected inputs") {
    auto F = Field::make(5);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly("x0^4+x1^4", F, 4)), std::invalid_argument);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly("x0^4+x1^4+x2^4+x3^3", F)), std::invalid_argument);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly("x0^3+x1^3+x2^3+x3^3", F)), std::invalid_argument);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly("x0^2+x1^2", F)), std::invalid_argument);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly("x0*(x0^3+x1^3+x2^3+x3^3)", F)), std::invalid_argument);
  }

  TEST_CASE("normalization") {
    auto F = Field::make(3);
    auto X = Hypersurface::make(parse_poly("x0^3*x3+x1^4+x2^4+x0*x3^3", F), true);
    CHECK_FALSE(X.f().coefficient(std::vector<int>{0, 0, 0, 4}).is_zero());
    CHECK(shear(X.f(), {0, 0, 0}) == X.f());
  }

  TEST_CASE("cohomology of O_X") {
    auto K3 = Hypersurface::make(parse_poly("x0^4+x1^4+x2^4+x3^4", Field::make(5)));
    CHECK(cohomology_dims(K3) == std::vector<std::uint64_t>{1, 0, 1});
    auto E = Hypersurface::make(parse_poly("x0^3+x1^3+x2^3", Field::make(2)));
    CHECK(cohomology_dims(E) == std::vector<std::uint64_t>{1, 1});
    auto Q = Hypersurface::make(parse_poly("x0^5+x1^5+x2^5+x3^5+x4^5", Field::make(2)));
    CHECK(cohomology_dims(Q) == std::vector<std::uint64_t>{1, 0, 0, 1});
  }
}
