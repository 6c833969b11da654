#include "fbh/strata.hpp"

#include <stdexcept>

#include "fbh/elliptic.hpp"

namespace fbh {

std::pair<FieldElement, FieldElement> curve_with_j(const FieldElement& j) {
  const FieldPtr& F = j.field();
  const FieldElement zero(F, 0), one(F, 1);
  const FieldElement k1728 = FieldElement::from_int(F, 1728);
  if (j.is_zero()) return {zero, one};
  if (j == k1728) return {one, zero};
  const FieldElement c = k1728 - j;
  return {FieldElement::from_int(F, 3) * j * c, FieldElement::from_int(F, 2) * j * c * c};
}

FieldElement j_invariant(const FieldElement& a4, const FieldElement& a6) {
  const FieldPtr& F = a4.field();
  const FieldElement t = FieldElement::from_int(F, 4) * a4.pow(3);
  const FieldElement disc = t + FieldElement::from_int(F, 27) * a6 * a6;
  if (disc.is_zero()) throw std::invalid_argument("singular curve has no j-invariant");
  return FieldElement::from_int(F, 1728) * t / disc;
}

unsigned aut_order(const FieldElement& j) {
  if (j.field()->p() < 5) throw std::invalid_argument("automorphism orders need p >= 5");
  if (j.is_zero()) return 6;
  if (j == FieldElement::from_int(j.field(), 1728)) return 4;
  return 2;
}

std::vector<FieldElement> ss_j_list(const FieldPtr& F) {
  if (F->p() < 5) throw std::invalid_argument("supersingular enumeration needs p >= 5");
  std::vector<FieldElement> out;
  for (std::uint32_t r = 0; r < F->order(); ++r) {
    const FieldElement j(F, r);
    auto [a4, a6] = curve_with_j(j);
    if (hasse_invariant(a4, a6).is_zero()) out.push_back(j);
  }
  return out;
}

std::vector<FieldElement> ss_j_list(std::uint32_t p) { return ss_j_list(Field::make(p, 2)); }

MassReport deuring_mass(std::uint32_t p) {
  MassReport r;
  r.p = p;
  r.j = ss_j_list(p);
  r.mass = 0;
  for (const auto& j : r.j) {
    r.aut.push_back(aut_order(j));
    r.mass += mpq_class(1, r.aut.back());
  }
  r.mass.canonicalize();
  mpq_class expected(p - 1, 24);
  expected.canonicalize();
  if (r.mass != expected)
    throw std::logic_error("mass " + r.mass.get_str() + " differs from " + expected.get_str() + " at p = " +
                           std::to_string(p));
  return r;
}

StratumClass stratum_class(std::uint32_t p, unsigned h) {
  if (h < 1 || h > 11) throw std::invalid_argument("stratum height must be in 1..11");
  StratumClass s;
  s.p = p;
  s.h = h;
  s.v_exponent = h - 1;
  s.coefficient = 1;
  mpz_class pi = 1;
  for (unsigned i = 1; i < h; ++i) {
    pi *= p;
    s.coefficient *= pi - 1;
  }
  if (h == 11)
    s.note = p == 2 ? "supersingular locus" : "supersingular locus counted with multiplicity 2";
  return s;
}

std::vector<StratumRow> strata_table(std::uint32_t p, unsigned h_max) {
  std::vector<StratumRow> rows;
  for (unsigned h = 1; h <= std::min(h_max, 11u); ++h) {
    StratumClass s = stratum_class(p, h);
    rows.push_back({h, h - 1, 20 - h, s.coefficient, s.note});
  }
  return rows;
}

bool artin_bound_check(unsigned h, unsigned rho, unsigned b2) { return rho <= b2 && 2 * h <= b2 - rho; }

}  // namespace fbh
