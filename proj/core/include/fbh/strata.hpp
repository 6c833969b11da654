#pragma once

// Supersingular j-invariants, the Deuring mass, and height strata of the
// moduli of K3 surfaces.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fbh/field.hpp"

namespace fbh {

// Supersingular j in F_{p^2}, p >= 5, in increasing encoding.
std::vector<FieldElement> ss_j_list(std::uint32_t p);
std::vector<FieldElement> ss_j_list(const FieldPtr& fp2);

// Curve y^2 = x^3 + a4 x + a6 with the given j-invariant.
std::pair<FieldElement, FieldElement> curve_with_j(const FieldElement& j);
FieldElement j_invariant(const FieldElement& a4, const FieldElement& a6);

unsigned aut_order(const FieldElement& j);

struct MassReport {
  std::uint32_t p = 0;
  std::vector<FieldElement> j;
  std::vector<unsigned> aut;
  mpq_class mass;
};

// Throws std::logic_error if the enumerated mass differs from (p-1)/24.
MassReport deuring_mass(std::uint32_t p);

struct StratumClass {
  std::uint32_t p = 0;
  unsigned h = 0;
  mpz_class coefficient;  // prod_{i=1}^{h-1} (p^i - 1)
  unsigned v_exponent = 0;
  std::string note;
};

StratumClass stratum_class(std::uint32_t p, unsigned h);

struct StratumRow {
  unsigned h = 0;
  unsigned codim = 0;
  unsigned dim = 0;
  mpz_class coefficient;
  std::string note;
};

std::vector<StratumRow> strata_table(std::uint32_t p, unsigned h_max = 11);

bool artin_bound_check(unsigned h, unsigned rho, unsigned b2 = 22);

}  // namespace fbh
