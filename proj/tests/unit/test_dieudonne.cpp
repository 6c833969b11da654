#include "doctest.h"

#include "fbh/dieudonne.hpp"

using namespace fbh;

TEST_SUITE("dieudonne") {
  TEST_CASE("module actions") {
    auto F = Field::make(3);
    DieudonneModule M1(1, 2, F);
    CHECK(M1.apply_F(M1.basis(0)) == M1.basis(0));
    DieudonneModule M2(2, 2, F);
    CHECK(M2.apply_F(M2.basis(0)) == M2.basis(1));
    CHECK(M2.apply_F(M2.basis(1)) == M2.times_p(M2.basis(0)));
    DieudonneModule M3(3, 1, F);
    CHECK(M3.F_rank_mod_p() == 1);
    for (unsigned h = 1; h <= 10; ++h) CHECK(DieudonneModule(h, 3, F).relations_hold());
  }

  TEST_CASE("dimension identities") {
    auto F = Field::make(5, 2);
    auto r1 = check_dims(DieudonneModule(1, 2, F));
    CHECK(r1.dim_M_VM == 1);
    CHECK(r1.dim_M_FM == 0);
    CHECK(r1.dim_M_pM == 1);
    auto r2 = check_dims(DieudonneModule(2, 2, F));
    CHECK((r2.dim_M_VM == 1 && r2.dim_M_FM == 1 && r2.dim_M_pM == 2));
    auto r10 = check_dims(DieudonneModule(10, 2, F));
    CHECK((r10.dim_M_VM == 1 && r10.dim_M_FM == 9 && r10.dim_M_pM == 10));
    CHECK(r10.sum_identity);
  }

  TEST_CASE("truncations") {
    auto F = Field::make(2);
    for (unsigned h = 2; h <= 6; ++h) {
      DieudonneModule M(h, 4, F);
      auto T = truncate(M, 1);
      CHECK(T.dimension() == 1);
      CHECK(T.f_is_zero());
      CHECK_FALSE(truncate(M, h).f_is_zero());
    }
    DieudonneModule M1(1, 2, F);
    CHECK_FALSE(truncate(M1, 1).f_is_zero());
    DieudonneModule M3(3, 2, F);
    CHECK(truncate(M3, 2).f_is_zero());
    CHECK_FALSE(truncate(M3, 3).f_is_zero());
    DieudonneModule M4(4, 3, F);
    CHECK(truncate(M4, 2).ker_f_dim() == 2);
    CHECK(truncate(M4, 7).ker_f_dim() == 3);
    DieudonneModule M1b(1, 6, F);
    CHECK(truncate(M1b, 5).ker_f_dim() == 0);
    CHECK_THROWS(truncate(DieudonneModule(2, 1, F), 5));
  }

  TEST_CASE("filtration images") {
    auto F = Field::make(3);
    auto r2 = filtration_image_check(DieudonneModule(2, 6, F));
    CHECK(r2.images_equal);
    CHECK(r2.codimension == 1);
    auto r1 = filtration_image_check(DieudonneModule(1, 11, F));
    CHECK(r1.codimension == 0);
    auto r10 = filtration_image_check(DieudonneModule(10, 2, F));
    CHECK(r10.images_equal);
    CHECK(r10.image_dim == 1);
  }

  TEST_CASE("cokernel lengths") {
    auto F = Field::make(3);
    auto gr = GaloisRing::get(F, 3);
    // Z/27 modulo 9 has length 2.
    GRMatrix cols{{gr->from_int(9)}};
    CHECK(cokernel_length(*gr, 1, cols) == 2);
  }
}
