#include "doctest.h"
#include "support.hpp"

#include "fbh/cochain.hpp"
#include "fbh/parse.hpp"
#include "fbh/tower.hpp"

using namespace fbh;

namespace {

// Random k-cochain whose values on J only have poles along J.
Cochain random_cochain(const CechComplex& C, int k, int terms) {
  Cochain c = C.zero(k);
  const FieldPtr& F = C.surface().field();
  const std::size_t N = C.charts();
  for (ChartSet J : C.subsets(k)) {
    std::vector<LaurentPoly::Term> t;
    for (int s = 0; s < terms; ++s) {
      std::vector<int> e(N, 0);
      int total = 0;
      for (std::size_t v = 0; v + 1 < N; ++v) {
        e[v] = (J >> v & 1) ? -int(test::rng()() % 4) : int(test::rng()() % 3);
        total += e[v];
      }
      e[N - 1] = -total;
      if (e[N - 1] < 0 && !(J >> (N - 1) & 1)) continue;
      t.push_back({mono::pack(e), std::uint32_t(1 + test::rng()() % (F->order() - 1))});
    }
    c.comp[J] = LaurentPoly::from_terms(F, N, t);
  }
  return c;
}

CechComplex complex_of(const char* f, std::uint32_t p) {
  return CechComplex(Hypersurface::make(parse_poly(f, Field::make(p))));
}

}  // namespace

TEST_SUITE("cochain") {
  TEST_CASE("coboundary squares to zero") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", 5);
    for (int k = 0; k < 2; ++k)
      for (int trial = 0; trial < 10; ++trial) {
        auto c = random_cochain(C, k, 6);
        auto dd = C.coboundary(C.coboundary(c));
        for (const auto& x : dd.comp) CHECK(x.is_zero());
      }
  }

  TEST_CASE("homotopy inverts the coboundary on cocycles") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", 3);
    for (int trial = 0; trial < 10; ++trial) {
      auto b = C.coboundary(random_cochain(C, 1, 5));
      auto g = C.homotopy(b);
      auto back = C.coboundary(g);
      for (ChartSet J : C.subsets(2)) CHECK(back.comp[J] == b.comp[J]);
    }
  }

  TEST_CASE("generator class") {
    for (auto [f, p] : {std::pair{"x0^4+x1^4+x2^4+x3^4", 5u}, {"x0^3+x1^3+x2^3", 2u},
                        {"x0^5+x1^5+x2^5+x3^5+x4^5", 2u}}) {
      auto C = complex_of(f, p);
      auto b = hn_O_basis(C);
      CHECK(b.certified_nonzero);
      CHECK(b.scalar == FieldElement(C.surface().field(), 1));
    }
  }

  TEST_CASE("solving coboundary equations") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", 5);
    for (int trial = 0; trial < 10; ++trial) {
      auto gamma = random_cochain(C, 1, 5);
      auto beta = C.coboundary(gamma);
      auto s = C.solve_linear(beta);
      REQUIRE(s.gamma.has_value());
      auto d = C.coboundary(*s.gamma);
      for (ChartSet J : C.subsets(2)) CHECK((beta.comp[J] - d.comp[J]).divide_exact(C.surface().f()).has_value());
    }
    auto zero = C.solve_linear(C.zero(2));
    REQUIRE(zero.gamma.has_value());
    for (const auto& x : zero.gamma->comp) CHECK(x.is_zero());
    auto z = C.solve_linear(C.zeta());
    CHECK_FALSE(z.gamma.has_value());
    CHECK_FALSE(z.obstruction.is_zero());
  }

  TEST_CASE("Witt solve recovers coboundaries") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", 3);
    for (int trial = 0; trial < 5; ++trial) {
      WittCochain g = C.witt_zero(1, 2);
      auto a = random_cochain(C, 1, 3), b = random_cochain(C, 1, 3);
      for (ChartSet J : C.subsets(1)) g.comp[J] = WittLaurent(3, {a.comp[J], b.comp[J]});
      auto beta = C.witt_coboundary(g);
      auto s = C.witt_solve(beta);
      REQUIRE(s.gamma.has_value());
      // The difference is a Witt cocycle that is a coboundary modulo W(f).
      auto back = C.witt_coboundary(*s.gamma);
      for (ChartSet J : C.subsets(2)) {
        auto diff = witt_sub(beta.comp[J], back.comp[J]);
        CHECK(diff[0].divide_exact(C.surface().f()).has_value());
      }
    }
  }

  TEST_CASE("digests are stable") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", 3);
    auto w = witt_from_cochain(C.zeta(), 3);
    CHECK(digest(w) == digest(witt_from_cochain(C.zeta(), 3)));
    CHECK(digest(w).size() == 16);
  }
}
