#include "doctest.h"
#include "support.hpp"

#include "fbh/elliptic.hpp"

using namespace fbh;

namespace {

// Coefficient of x^{p-1} in (x^3 + a4 x + a6)^{(p-1)/2} by repeated multiplication.
FieldElement hasse_by_expansion(const FieldElement& a4, const FieldElement& a6) {
  const FieldPtr& F = a4.field();
  std::vector<FieldElement> cubic{a6, a4, FieldElement(F, 0), FieldElement(F, 1)};
  std::vector<FieldElement> acc{FieldElement(F, 1)};
  for (std::uint32_t k = 0; k < (F->p() - 1) / 2; ++k) {
    std::vector<FieldElement> next(acc.size() + 3, FieldElement(F, 0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < 4; ++j) next[i + j] += acc[i] * cubic[j];
    acc = next;
  }
  return acc[F->p() - 1];
}

}  // namespace

TEST_SUITE("elliptic") {
  TEST_CASE("Hasse invariant examples") {
    auto F = Field::make(5);
    CHECK(hasse_invariant(FieldElement(F, 1), FieldElement(F, 0)) == FieldElement(F, 2));
    CHECK(hasse_invariant(FieldElement(F, 0), FieldElement(F, 1)).is_zero());
    CHECK(hasse_invariant(FieldElement(F, 1), FieldElement(F, 1)) == FieldElement(F, 2));
  }

  TEST_CASE("Hasse invariant agrees with direct expansion") {
    for (auto [p, d] : {std::pair{5u, 2u}, {7u, 2u}, {11u, 1u}, {13u, 2u}}) {
      auto F = Field::make(p, d);
      for (int trial = 0; trial < 60; ++trial) {
        auto a4 = test::random_element(F), a6 = test::random_element(F);
        if (!is_nonsingular(a4, a6)) continue;
        CHECK(hasse_invariant(a4, a6) == hasse_by_expansion(a4, a6));
      }
    }
  }

  TEST_CASE("formal group heights") {
    auto F5 = Field::make(5), F7 = Field::make(7);
    auto h = [](const FieldPtr& F, int a4, int a6, std::size_t N) {
      return height_of(ec_fgl(FieldElement::from_int(F, a4), FieldElement::from_int(F, a6), N), 2);
    };
    auto r1 = h(F5, 1, 0, 26);
    CHECK(r1.kind == HeightKind::Exact);
    CHECK(r1.h == 1);
    auto r2 = h(F7, 1, 0, 50);
    CHECK(r2.kind == HeightKind::Exact);
    CHECK(r2.h == 2);
    auto r3 = h(F5, 0, 1, 26);
    CHECK(r3.kind == HeightKind::Exact);
    CHECK(r3.h == 2);
  }

  TEST_CASE("elliptic laws satisfy the axioms") {
    auto F = Field::make(7);
    auto law = ec_fgl(FieldElement(F, 3), FieldElement(F, 2), 20);
    CHECK(fgl_check(law.series(), 20).valid);
  }

  TEST_CASE("invalid curves") {
    auto F = Field::make(5);
    CHECK_THROWS_AS(ec_fgl(FieldElement(F, 0), FieldElement(F, 0), 10), std::invalid_argument);
    auto F3 = Field::make(3);
    CHECK_THROWS_AS(hasse_invariant(FieldElement(F3, 1), FieldElement(F3, 0)), std::invalid_argument);
  }
}
