#include "doctest.h"
#include "support.hpp"

#include "fbh/lubin_tate.hpp"

using namespace fbh;

TEST_SUITE("formal_group") {
  TEST_CASE("axiom checks") {
    auto F = Field::make(3);
    const std::size_t N = 8;
    auto x = Series2::x(F, N), y = Series2::y(F, N);
    CHECK(fgl_check(x + y, N).valid);
    CHECK(fgl_check(x + y + x * y, N).valid);
    auto bad = fgl_check(x + y + x * x, N);
    CHECK_FALSE(bad.valid);
    REQUIRE_FALSE(bad.violations.empty());
  }

  TEST_CASE("multiplication by m") {
    auto F2 = Field::make(2);
    auto two = mult_by(2, FormalGroupLaw::multiplicative(F2, 6));
    CHECK(two.valuation() == 2);
    CHECK(two[2] == 1);
    CHECK(two[3] == 0);
    auto F3 = Field::make(3);
    CHECK(mult_by(3, FormalGroupLaw::additive(F3, 10)).is_zero());
    auto F5 = Field::make(5);
    auto five = mult_by(5, FormalGroupLaw::multiplicative(F5, 12));
    for (std::size_t k = 0; k <= 12; ++k) CHECK(five[k] == (k == 5 ? 1u : 0u));
  }

  TEST_CASE("heights of the basic laws") {
    auto F = Field::make(5, 2);
    auto m = height_of(FormalGroupLaw::multiplicative(F, 26), 2);
    CHECK(m.kind == HeightKind::Exact);
    CHECK(m.h == 1);
    CHECK(*m.leading == FieldElement(F, 1));
    auto a = height_of(FormalGroupLaw::additive(F, 26), 2);
    CHECK(a.kind == HeightKind::InfiniteWithinTruncation);
    auto b = height_of(FormalGroupLaw::additive(F, 20), 2);
    CHECK(b.kind == HeightKind::AtLeast);
    CHECK(b.h == 2);
  }

  TEST_CASE("Lubin-Tate laws") {
    for (std::uint32_t p : {2u, 3u})
      for (unsigned h = 1; h <= 3; ++h) {
        std::size_t N = 1;
        for (unsigned k = 0; k < h; ++k) N *= p;
        N += 1;
        auto law = lubin_tate(p, h, N);
        CHECK(fgl_check(law.series(), N).valid);
        auto r = height_of(law, h);
        CHECK(r.kind == HeightKind::Exact);
        CHECK(r.h == h);
        // [p](t) = t^{p^h} exactly.
        for (std::size_t k = 0; k <= N; ++k) CHECK(r.p_series[k] == (k == N - 1 ? 1u : 0u));
      }
    CHECK_THROWS(lubin_tate(2, 3, 5));
  }

  TEST_CASE("height is an isomorphism invariant") {
    auto F = Field::make(3);
    auto law = lubin_tate(3, 2, 10);
    for (int trial = 0; trial < 5; ++trial) {
      Series1 phi(F, 10);
      phi.coeff(1) = 1 + std::uint32_t(test::rng()() % 2);
      for (std::size_t k = 2; k <= 10; ++k) phi.coeff(k) = std::uint32_t(test::rng()() % 3);
      auto G = conjugate(law, phi);
      CHECK(fgl_check(G.series(), 10).valid);
      auto r = height_of(G, 2);
      CHECK(r.kind == HeightKind::Exact);
      CHECK(r.h == 2);
    }
  }

  TEST_CASE("compositional inverse") {
    auto F = Field::make(5);
    Series1 phi(F, 7);
    phi.coeff(1) = 2;
    phi.coeff(2) = 1;
    phi.coeff(5) = 3;
    auto inv = compositional_inverse(phi);
    // phi(inv(t)) = t, with phi viewed as a series in x alone.
    Series2 P(F, 7);
    for (std::size_t k = 1; k <= 7; ++k) P.set(k, 0, phi[k]);
    CHECK(P.compose(inv, Series1(F, 7)) == Series1::variable(F, 7));
  }
}
