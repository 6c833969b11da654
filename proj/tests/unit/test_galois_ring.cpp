#include "doctest.h"
#include "support.hpp"

#include "fbh/galois_ring.hpp"

using namespace fbh;

TEST_SUITE("galois_ring") {
  TEST_CASE("Witt coordinates round trip") {
    auto F = Field::make(3, 2);
    auto gr = GaloisRing::get(F, 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<FieldElement> a{test::random_element(F), test::random_element(F), test::random_element(F)};
      CHECK(gr->to_witt(gr->from_witt(a)) == a);
    }
  }

  TEST_CASE("sigma is a ring automorphism lifting frobenius") {
    auto F = Field::make(2, 3);
    auto gr = GaloisRing::get(F, 4);
    for (int trial = 0; trial < 50; ++trial) {
      auto a = gr->lift(test::random_element(F).raw()), b = gr->lift(test::random_element(F).raw());
      a = gr->add(a, gr->scale(gr->lift(test::random_element(F).raw()), 2));
      CHECK(gr->sigma(gr->mul(a, b)) == gr->mul(gr->sigma(a), gr->sigma(b)));
      CHECK(gr->sigma(gr->add(a, b)) == gr->add(gr->sigma(a), gr->sigma(b)));
      CHECK(gr->sigma_inverse(gr->sigma(a)) == a);
      CHECK(gr->residue(gr->sigma(a)) == F->frobenius(gr->residue(a)));
    }
  }

  TEST_CASE("Teichmuller lifts are multiplicative and fixed by x -> x^q") {
    auto F = Field::make(5, 2);
    auto gr = GaloisRing::get(F, 3);
    for (int trial = 0; trial < 30; ++trial) {
      auto x = test::random_element(F), y = test::random_element(F);
      CHECK(gr->mul(gr->teichmuller(x.raw()), gr->teichmuller(y.raw())) == gr->teichmuller((x * y).raw()));
      auto t = gr->teichmuller(x.raw());
      CHECK(gr->pow(t, F->order()) == t);
    }
  }

  TEST_CASE("valuations and inverses") {
    auto F = Field::make(3);
    auto gr = GaloisRing::get(F, 4);
    auto nine = gr->from_int(9);
    CHECK(gr->valuation(nine) == 2);
    CHECK(gr->div_p_power(nine, 2) == gr->one());
    auto u = gr->from_int(5);
    CHECK(gr->mul(u, gr->unit_inverse(u)) == gr->one());
  }
}
