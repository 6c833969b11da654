#include "fbh/hypersurface.hpp"

#include <stdexcept>

namespace fbh {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim H^k(P^r, O(m)) with r = nvars - 1.
std::uint64_t bott(std::size_t nvars, std::int64_t m, std::size_t k) {
  const std::size_t r = nvars - 1;
  if (k == 0) return m < 0 ? 0 : binom(std::uint64_t(m) + r, r);
  if (k == r) return m > -std::int64_t(nvars) ? 0 : binom(std::uint64_t(-m - 1), r);
  return 0;
}

}  // namespace

LaurentPoly shear(const LaurentPoly& f, const std::vector<std::uint32_t>& c) {
  const std::size_t N = f.nvars();
  if (c.size() + 1 != N) throw std::invalid_argument("shear needs one shift per non-last variable");
  const FieldPtr& fld = f.field();
  std::vector<LaurentPoly> images;
  const LaurentPoly last = LaurentPoly::variable(fld, N, N - 1);
  for (std::size_t j = 0; j + 1 < N; ++j)
    images.push_back(LaurentPoly::variable(fld, N, j) + last.scaled(c[j]));
  images.push_back(last);
  LaurentPoly out(fld, N);
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto e = f.exponents(t);
    LaurentPoly term = LaurentPoly::constant(fld, N, f.terms()[t].coeff);
    for (std::size_t v = 0; v < N; ++v) {
      if (e[v] < 0) throw std::invalid_argument("shear needs a polynomial");
      if (e[v]) term = term * images[v].pow(std::uint64_t(e[v]));
    }
    out += term;
  }
  return out;
}

Hypersurface Hypersurface::make(const LaurentPoly& f, bool normalize) {
  const std::size_t N = f.nvars();
  if (N < 3 || N > 5)
    throw std::invalid_argument("Calabi-Yau hypersurface needs 3, 4 or 5 variables, got " + std::to_string(N));
  if (f.is_zero()) throw std::invalid_argument("polynomial is zero");
  for (std::size_t v = 0; v < N; ++v)
    if (f.min_exponent(v) < 0) throw std::invalid_argument("polynomial has negative exponents");
  if (!f.is_homogeneous(int(N)))
    throw std::invalid_argument("polynomial must be homogeneous of degree " + std::to_string(N) +
                                " (the number of variables)");
  for (std::size_t v = 0; v < N; ++v) {
    if (f.max_exponent(v) == 0)
      throw std::invalid_argument("polynomial does not involve x" + std::to_string(v) +
                                  "; the hypersurface is a cone and is rejected");
    if (f.min_exponent(v) > 0)
      throw std::invalid_argument("polynomial is divisible by x" + std::to_string(v));
  }
  if (!normalize) return Hypersurface(f, {});

  const std::uint64_t q = f.field()->order();
  std::vector<std::uint32_t> c(N - 1, 0);
  while (true) {
    std::vector<int> top(N, 0);
    top[N - 1] = int(N);
    LaurentPoly g = shear(f, c);
    if (!g.coefficient(top).is_zero()) return Hypersurface(g, c);
    std::size_t i = N - 1;
    while (i-- > 0) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
    if (i == std::size_t(-1)) break;
  }
  throw std::invalid_argument("no normalizing coordinate change over " + f.field()->describe());
}

std::vector<std::uint64_t> cohomology_dims(const Hypersurface& X) {
  const std::size_t N = X.charts();
  const int n = X.dim();
  const std::int64_t d = std::int64_t(N);
  std::vector<std::uint64_t> out;
  // Line bundles on P^{n+1} only have H^0 and H^{n+1}, so the long exact
  // sequence breaks into short pieces.
  for (int k = 0; k <= n; ++k) {
    std::uint64_t v = bott(N, 0, std::size_t(k)) - (k == 0 ? bott(N, -d, 0) : 0);
    v += bott(N, -d, std::size_t(k) + 1) - (k + 1 == int(N) - 1 ? bott(N, 0, std::size_t(k) + 1) : 0);
    out.push_back(v);
  }
  return out;
}

}  // namespace fbh
