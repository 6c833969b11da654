#include "fbh/serre.hpp"

namespace fbh {

std::vector<LaurentPoly> serre_D(const WittVector<LaurentPoly>& w) {
  const std::size_t i = w.length();
  const LaurentPoly& like = w[0];
  std::vector<LaurentPoly> form(like.nvars(), zero_like(like));
  for (std::size_t k = 0; k < i; ++k) {
    const LaurentPoly& a = w[k];
    if (a.is_zero()) continue;
    std::uint64_t e = 1;
    for (std::size_t s = k + 1; s < i; ++s) e *= w.prime();
    const LaurentPoly factor = a.pow(e - 1);
    for (std::size_t v = 0; v < form.size(); ++v) {
      LaurentPoly da = a.derivative(v);
      if (!da.is_zero()) form[v] += factor * da;
    }
  }
  return form;
}

}  // namespace fbh
