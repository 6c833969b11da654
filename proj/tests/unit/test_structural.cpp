#include "doctest.h"

#include "fbh/structural.hpp"

using namespace fbh;

namespace {

IntPoly var(std::size_t nvars, std::size_t v) { return IntPoly::variable(nvars, v); }

}  // namespace

TEST_SUITE("structural") {
  TEST_CASE("first sum and product polynomials") {
    auto X0 = var(4, 0), Y0 = var(4, 1), X1 = var(4, 2), Y1 = var(4, 3);
    CHECK(structural_poly(2, WittOp::Sum, 1) == X1 + Y1 - X0 * Y0);
    CHECK(structural_poly(2, WittOp::Product, 1) == X0.pow(2) * Y1 + Y0.pow(2) * X1 + (X1 * Y1).scaled(2));
    CHECK(structural_poly(3, WittOp::Sum, 1) == X1 + Y1 - X0.pow(2) * Y0 - X0 * Y0.pow(2));
    CHECK(structural_poly(5, WittOp::Sum, 0) == var(2, 0) + var(2, 1));
  }

  TEST_CASE("ghost components are additive and multiplicative") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t nv = 2 * (k + 1);
        auto wx = ghost_component(p, k, false), wy = ghost_component(p, k, true);
        // Substitute S_0..S_k into w_k via the recursion's defining identity.
        IntPoly ws(nv), wp(nv), wd(nv);
        mpz_class pi = 1;
        for (std::size_t i = 0; i <= k; ++i) {
          std::uint64_t e = 1;
          for (std::size_t j = i; j < k; ++j) e *= p;
          ws = ws + structural_poly(p, WittOp::Sum, i).extended(nv).pow(e).scaled(pi);
          wd = wd + structural_poly(p, WittOp::Difference, i).extended(nv).pow(e).scaled(pi);
          wp = wp + structural_poly(p, WittOp::Product, i).extended(nv).pow(e).scaled(pi);
          pi *= p;
        }
        CHECK(ws == wx + wy);
        CHECK(wd == wx - wy);
        CHECK(wp == wx * wy);
      }
    }
  }

  TEST_CASE("reduced polynomials keep coefficients in range") {
    auto r = reduced_structural(3, WittOp::Product, 3, 3);
    REQUIRE(r->size() == 3);
    for (const auto& poly : *r)
      for (const auto& t : poly) {
        CHECK(t.coeff > 0);
        CHECK(t.coeff < 3);
      }
  }
}
