#pragma once

#include <cstdint>

#include "fbh/formal_group.hpp"

namespace fbh {

// The Lubin-Tate law over Z_p with endomorphism f(t) = p t + t^{p^h},
// computed modulo p^{N+1} degree by degree and reduced to F_p. Its
// reduction has [p](t) = t^{p^h}. Requires N >= p^h + 1.
FormalGroupLaw lubin_tate(std::uint32_t p, unsigned h, std::size_t N);

}  // namespace fbh
