#include "doctest.h"
#include "support.hpp"

#include "fbh/laurent.hpp"
#include "fbh/parse.hpp"

using namespace fbh;

namespace {

LaurentPoly random_laurent(const FieldPtr& F, std::size_t nvars, int terms, int lo, int hi) {
  std::vector<LaurentPoly::Term> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = lo + int(test::rng()() % std::uint64_t(hi - lo + 1));
    t.push_back({mono::pack(e), std::uint32_t(test::rng()() % F->order())});
  }
  return LaurentPoly::from_terms(F, nvars, t);
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("coefficient examples") {
    auto F5 = Field::make(5);
    auto f = parse_poly("x0^6+2*x0^4+x0^2", F5);
    const int e4[] = {4};
    CHECK(f.coefficient(e4) == FieldElement(F5, 2));
    const int e3[] = {3};
    CHECK(f.coefficient(e3).is_zero());
    const int em[] = {1, -1};
    auto g = LaurentPoly::monomial(F5, em);
    CHECK(g.coefficient(em) == FieldElement(F5, 1));
  }

  TEST_CASE("ring laws on random Laurent polynomials") {
    auto F = Field::make(3, 2);
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_laurent(F, 3, 6, -3, 3), b = random_laurent(F, 3, 6, -3, 3), c = random_laurent(F, 3, 40, -3, 3);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("frobenius and pow") {
    auto F = Field::make(5, 2);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_laurent(F, 2, 5, -2, 2), b = random_laurent(F, 2, 5, -2, 2);
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK(a.pow(5) == a.frobenius());
      CHECK(a.pow(7) == a.pow(5) * a * a);
    }
  }

  TEST_CASE("exact division") {
    auto F = Field::make(7);
    for (int trial = 0; trial < 30; ++trial) {
      auto q = random_laurent(F, 3, 8, -4, 4);
      auto f = random_laurent(F, 3, 5, 0, 4);
      if (f.is_zero()) continue;
      auto r = (q * f).divide_exact(f);
      REQUIRE(r.has_value());
      CHECK(*r == q);
    }
    auto x = parse_poly("x0+1", F, 2), y = parse_poly("x1", F, 2);
    CHECK_FALSE(x.divide_exact(y + x).has_value());
  }

  TEST_CASE("derivative") {
    auto F = Field::make(3);
    auto f = parse_poly("x0^3*x1+2*x0*x1^2", F);
    CHECK(f.derivative(0) == parse_poly("2*x1^2", F, 2));
    CHECK(f.derivative(1) == parse_poly("x0^3+x0*x1", F, 2));
  }

  TEST_CASE("exponent overflow is reported") {
    auto F = Field::make(3);
    const int e[] = {-2000};
    auto a = LaurentPoly::monomial(F, e);
    CHECK_THROWS_AS(a * a, std::overflow_error);
  }
}
