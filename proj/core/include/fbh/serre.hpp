#pragma once

// D_i(a_0, ..., a_{i-1}) = sum_k a_k^{p^{i-1-k} - 1} da_k on the free Laurent
// algebra, as the coefficient list of dx_0, ..., dx_{N-1}.

#include <vector>

#include "fbh/witt.hpp"

namespace fbh {

std::vector<LaurentPoly> serre_D(const WittVector<LaurentPoly>& w);

}  // namespace fbh
