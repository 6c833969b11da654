#include "doctest.h"
#include "support.hpp"

#include <map>

#include "fbh/elliptic.hpp"
#include "fbh/parse.hpp"
#include "fbh/tower.hpp"

using namespace fbh;

namespace {

CechComplex complex_of(const std::string& f, const FieldPtr& F) { return CechComplex(Hypersurface::make(parse_poly(f, F))); }

// Coefficient of (x_0 ... x_{N-1})^{p-1} in f^{p-1}, expanded over exponent
// vectors with a std::map.
FieldElement multinomial_oracle(const LaurentPoly& f) {
  const FieldPtr& F = f.field();
  const std::size_t N = f.nvars();
  std::map<std::vector<int>, FieldElement> acc{{std::vector<int>(N, 0), FieldElement(F, 1)}};
  for (std::uint32_t k = 0; k + 1 < F->p(); ++k) {
    std::map<std::vector<int>, FieldElement> next;
    for (const auto& [e, c] : acc)
      for (std::size_t t = 0; t < f.size(); ++t) {
        auto g = f.exponents(t);
        bool over = false;
        for (std::size_t v = 0; v < N; ++v) {
          g[v] += e[v];
          over |= g[v] > int(F->p()) - 1;
        }
        if (over) continue;
        auto it = next.try_emplace(g, FieldElement(F, 0)).first;
        it->second += c * FieldElement(F, f.terms()[t].coeff);
      }
    acc = std::move(next);
  }
  auto it = acc.find(std::vector<int>(N, int(F->p()) - 1));
  return it == acc.end() ? FieldElement(F, 0) : it->second;
}

LaurentPoly random_form(const FieldPtr& F, std::size_t N, int degree) {
  std::vector<LaurentPoly::Term> terms;
  std::vector<int> e(N, 0);
  // x_j^degree for every j keeps every variable involved.
  for (std::size_t v = 0; v < N; ++v) {
    std::fill(e.begin(), e.end(), 0);
    e[v] = degree;
    terms.push_back({mono::pack(e), std::uint32_t(1 + test::rng()() % (F->order() - 1))});
  }
  for (int s = 0; s < 6; ++s) {
    std::fill(e.begin(), e.end(), 0);
    for (int k = 0; k < degree; ++k) ++e[test::rng()() % N];
    terms.push_back({mono::pack(e), std::uint32_t(test::rng()() % F->order())});
  }
  return LaurentPoly::from_terms(F, N, terms);
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("Fermat quartics") {
    auto C5 = complex_of("x0^4+x1^4+x2^4+x3^4", Field::make(5));
    CHECK(frobenius_scalar(C5) == FieldElement(Field::make(5), 4));
    auto c5 = phi_tower(C5);
    CHECK(c5.verdict == Verdict::Exact);
    CHECK(c5.h == 1);
    CHECK(c5.levels.back().witness->to_string() == "4");

    auto F13 = Field::make(13);
    auto C13 = complex_of("x0^4+x1^4+x2^4+x3^4", F13);
    // 12! / (3!)^4 mod 13.
    mpz_class m;
    mpz_fac_ui(m.get_mpz_t(), 12);
    m /= 6 * 6 * 6 * 6;
    auto c13 = phi_tower(C13);
    CHECK(c13.verdict == Verdict::Exact);
    CHECK(c13.h == 1);
    CHECK(*c13.levels.back().witness == FieldElement::from_int(F13, mpz_class(m % 13).get_si()));

    auto C3 = complex_of("x0^4+x1^4+x2^4+x3^4", Field::make(3));
    CHECK(frobenius_scalar(C3).is_zero());
    TowerOptions o;
    o.i_max = 3;
    auto c3 = phi_tower(C3, o);
    CHECK(c3.verdict == Verdict::AtLeast);
    CHECK(c3.h >= 3);
    REQUIRE(c3.levels.size() >= 2);
    CHECK_FALSE(c3.levels[0].witness.has_value());
    CHECK_FALSE(c3.levels[1].witness.has_value());
  }

  TEST_CASE("Fermat cubics") {
    auto c2 = phi_tower(complex_of("x0^3+x1^3+x2^3", Field::make(2)));
    CHECK(c2.verdict == Verdict::Exact);
    CHECK(c2.h == 2);
    auto c5 = phi_tower(complex_of("x0^3+x1^3+x2^3", Field::make(5)));
    CHECK(c5.h == 2);
    auto c7 = phi_tower(complex_of("x0^3+x1^3+x2^3", Field::make(7)));
    CHECK(c7.h == 1);
    CHECK(c7.levels.back().witness->to_string() == "6");
  }

  TEST_CASE("frobenius scalar equals the multinomial coefficient") {
    for (auto [p, d, N] : {std::tuple{5u, 1u, 4}, {7u, 1u, 4}, {5u, 2u, 3}, {7u, 1u, 3}, {3u, 2u, 4}}) {
      auto F = Field::make(p, d);
      for (int trial = 0; trial < 6; ++trial) {
        auto f = random_form(F, std::size_t(N), N);
        CechComplex C(Hypersurface::make(f));
        CHECK(frobenius_scalar(C) == multinomial_oracle(f));
      }
    }
  }

  TEST_CASE("Weierstrass cubics agree with the Hasse invariant") {
    for (std::uint32_t p : {5u, 7u}) {
      auto F = Field::make(p);
      for (std::uint32_t a4 = 0; a4 < p; ++a4)
        for (std::uint32_t a6 = 0; a6 < p; ++a6) {
          FieldElement A(F, a4), B(F, a6);
          if (!is_nonsingular(A, B)) continue;
          // y^2 z = x^3 + a4 x z^2 + a6 z^3 with x = x0, y = x1, z = x2.
          auto f = parse_poly("x1^2*x2-x0^3-(" + A.to_string() + ")*x0*x2^2-(" + B.to_string() + ")*x2^3", F);
          CechComplex C(Hypersurface::make(f));
          const bool ss = hasse_invariant(A, B).is_zero();
          CHECK(frobenius_scalar(C).is_zero() == ss);
          auto c = phi_tower(C);
          CHECK(c.verdict == Verdict::Exact);
          CHECK(c.h == (ss ? 2u : 1u));
        }
    }
  }

  TEST_CASE("phi_n is sigma^n-linear") {
    auto F = Field::make(2, 3);
    auto C = complex_of("x0^3+x1^3+x2^3", F);
    const FieldElement base = *phi_tower(C).levels.back().witness;
    for (std::uint32_t r = 1; r < 8; ++r) {
      FieldElement lambda(F, r);
      TowerOptions o;
      o.basis_scale = lambda;
      auto c = phi_tower(C, o);
      REQUIRE(c.verdict == Verdict::Exact);
      CHECK(c.h == 2);
      CHECK(*c.levels.back().witness == base * lambda.pow(3));
    }
  }

  TEST_CASE("quintic threefolds") {
    auto c = phi_tower(complex_of("x0^5+x1^5+x2^5+x3^5+x4^5", Field::make(11)));
    CHECK(c.verdict == Verdict::Exact);
    CHECK(c.h == 1);
    TowerOptions o;
    o.i_max = 2;
    auto c2 = phi_tower(complex_of("x0^5+x1^5+x2^5+x3^5+x4^5", Field::make(2)), o);
    CHECK(c2.verdict == Verdict::AtLeast);
  }

  TEST_CASE("kernel of F against min(i, h-1)") {
    auto C1 = complex_of("x0^4+x1^4+x2^4+x3^4", Field::make(5));
    CHECK(ker_f_dim_cech(C1, 3) == 0);
    auto C2 = complex_of("x0^4+x1^4+2*x1^2*x2^2+x2^4+x3^4", Field::make(3));
    REQUIRE(phi_tower(C2).h == 2);
    CHECK(ker_f_dim_cech(C2, 1) == 1);
    CHECK(ker_f_dim_cech(C2, 4) == 1);
    auto C3 = complex_of("x0^4+x1^4+x2^4+x3^4", Field::make(3));
    CHECK(ker_f_dim_cech(C3, 1) == 1);
    CHECK(ker_f_dim_cech(C3, 2) == 2);
    CHECK_THROWS_AS(ker_f_dim_cech(C3, 12, 1000), std::runtime_error);
  }

  TEST_CASE("lifts restrict to the previous level") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", Field::make(3));
    auto lifts = zeta_lifts(C, 3);
    for (std::size_t k = 1; k < lifts.size(); ++k) {
      const auto& hi = lifts[k];
      const auto& lo = lifts[k - 1];
      for (ChartSet J : C.subsets(2)) CHECK(witt_R(hi.comp[J]) == lo.comp[J]);
    }
  }

  TEST_CASE("window exhaustion gives a partial certificate") {
    auto C = complex_of("x0^4+x1^4+x2^4+x3^4", Field::make(3));
    TowerOptions o;
    o.i_max = 3;
    o.window_cap = 10;
    auto c = phi_tower(C, o);
    CHECK(c.verdict == Verdict::AtLeast);
    CHECK(c.note.find("window") != std::string::npos);
  }
}
