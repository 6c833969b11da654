#include "doctest.h"

#include <set>

#include "fbh/elliptic.hpp"
#include "fbh/strata.hpp"

using namespace fbh;

namespace {

std::vector<std::string> names(const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("supersingular j-invariants") {
    CHECK(names(ss_j_list(5)) == std::vector<std::string>{"0"});
    CHECK(names(ss_j_list(7)) == std::vector<std::string>{"6"});
    CHECK(names(ss_j_list(11)) == std::vector<std::string>{"0", "1"});
    CHECK_THROWS(ss_j_list(3));
  }

  TEST_CASE("enumeration over all curves gives the same j set") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      auto F = Field::make(p, 2);
      std::set<std::uint32_t> js;
      for (std::uint32_t a4 = 0; a4 < F->order(); ++a4)
        for (std::uint32_t a6 = 0; a6 < F->order(); ++a6) {
          FieldElement A(F, a4), B(F, a6);
          if (!is_nonsingular(A, B) || !hasse_invariant(A, B).is_zero()) continue;
          js.insert(j_invariant(A, B).raw());
        }
      std::set<std::uint32_t> listed;
      for (const auto& j : ss_j_list(F)) {
        listed.insert(j.raw());
        CHECK(j.pow(F->order()) == j);
        auto [a4, a6] = curve_with_j(j);
        CHECK(j_invariant(a4, a6) == j);
      }
      CHECK(js == listed);
    }
  }

  TEST_CASE("automorphism orders") {
    auto F5 = Field::make(5, 2), F7 = Field::make(7, 2), F13 = Field::make(13, 2);
    CHECK(aut_order(FieldElement(F5, 0)) == 6);
    CHECK(aut_order(FieldElement(F7, 6)) == 4);
    CHECK(aut_order(FieldElement(F13, 5)) == 2);
  }

  TEST_CASE("Deuring mass") {
    CHECK(deuring_mass(5).mass == mpq_class(1, 6));
    CHECK(deuring_mass(11).mass == mpq_class(5, 12));
    CHECK(deuring_mass(13).mass == mpq_class(1, 2));
  }

  TEST_CASE("stratum classes") {
    CHECK(stratum_class(2, 4).coefficient == 21);
    CHECK(stratum_class(2, 4).v_exponent == 3);
    CHECK(stratum_class(7, 1).coefficient == 1);
    CHECK(stratum_class(3, 3).coefficient == 16);
    for (std::uint32_t p : {2u, 3u, 5u})
      for (unsigned h = 1; h < 11; ++h) {
        mpz_class ph;
        mpz_ui_pow_ui(ph.get_mpz_t(), p, h);
        CHECK(stratum_class(p, h + 1).coefficient == stratum_class(p, h).coefficient * (ph - 1));
      }
    CHECK(stratum_class(5, 11).note.find("multiplicity 2") != std::string::npos);
    CHECK(stratum_class(2, 11).note.find("multiplicity 2") == std::string::npos);
  }

  TEST_CASE("strata table rows") {
    auto rows = strata_table(2);
    REQUIRE(rows.size() == 11);
    CHECK((rows[1].h == 2 && rows[1].codim == 1 && rows[1].dim == 18 && rows[1].coefficient == 1));
    CHECK((rows[0].h == 1 && rows[0].codim == 0 && rows[0].dim == 19));
  }

  TEST_CASE("Artin bound") {
    CHECK(artin_bound_check(10, 2));
    CHECK(artin_bound_check(11, 0));
    CHECK_FALSE(artin_bound_check(11, 1));
    CHECK_FALSE(artin_bound_check(10, 3));
    CHECK(artin_bound_check(1, 20));
  }
}
