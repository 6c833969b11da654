#pragma once

// Calabi-Yau hypersurfaces X = {f = 0} in P^{n+1}: f homogeneous of degree
// n + 2 in n + 2 variables, n in {1, 2, 3}.

#include <cstdint>
#include <optional>
#include <vector>

#include "fbh/laurent.hpp"

namespace fbh {

class Hypersurface {
 public:
  // Validates f. With `normalize`, first applies x_j -> x_j + c_j x_last
  // (j < last) for the first c in lexicographic order over F_q making the
  // coefficient of x_last^{n+2} nonzero. Smoothness is not checked.
  static Hypersurface make(const LaurentPoly& f, bool normalize = false);

  const LaurentPoly& f() const { return f_; }
  const FieldPtr& field() const { return f_.field(); }
  std::size_t charts() const { return f_.nvars(); }
  int dim() const { return int(f_.nvars()) - 2; }
  // The shift c used by normalization, empty if none was applied.
  const std::vector<std::uint32_t>& normalization() const { return shift_; }

 private:
  Hypersurface(LaurentPoly f, std::vector<std::uint32_t> shift) : f_(std::move(f)), shift_(std::move(shift)) {}

  LaurentPoly f_;
  std::vector<std::uint32_t> shift_;
};

// Applies x_j -> x_j + c_j x_last for j < last.
LaurentPoly shear(const LaurentPoly& f, const std::vector<std::uint32_t>& c);

// dim_k H^k(X, O_X) for k = 0..n, from Bott's formula on P^{n+1} and the
// sequence 0 -> O(-n-2) -> O -> O_X -> 0.
std::vector<std::uint64_t> cohomology_dims(const Hypersurface& X);

}  // namespace fbh
