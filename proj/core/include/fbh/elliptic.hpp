#pragma once

// Formal groups of elliptic curves y^2 = x^3 + a4 x + a6 in characteristic
// p >= 5, and the Hasse invariant.

#include "fbh/formal_group.hpp"

namespace fbh {

bool is_nonsingular(const FieldElement& a4, const FieldElement& a6);

// Group law in the parameter z = -x/y, truncated at N.
FormalGroupLaw ec_fgl(const FieldElement& a4, const FieldElement& a6, std::size_t N);

// Coefficient of x^{p-1} in (x^3 + a4 x + a6)^{(p-1)/2}.
FieldElement hasse_invariant(const FieldElement& a4, const FieldElement& a6);

}  // namespace fbh
