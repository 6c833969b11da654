#include "fbh/formal_group.hpp"

#include <stdexcept>

namespace fbh {

namespace {

std::string monomial_name(std::size_t i, std::size_t j, std::size_t k = 0) {
  std::string s;
  auto put = [&](const char* v, std::size_t e) {
    if (!e) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put("x", i);
  put("y", j);
  put("z", k);
  return s.empty() ? "1" : s;
}

// Dense trivariate series truncated at total degree N.
struct Tri {
  std::size_t N;
  std::vector<std::uint32_t> c;
  explicit Tri(std::size_t n) : N(n), c((n + 1) * (n + 1) * (n + 1), 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * (N + 1) + j) * (N + 1) + k]; }
};

Series2 truncated(const Series2& F, std::size_t N) {
  Series2 r(F.field(), N);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; i + j <= N; ++j) r.set(i, j, F.at(i, j));
  return r;
}

}  // namespace

FormalGroupLaw FormalGroupLaw::additive(const FieldPtr& field, std::size_t N) {
  return FormalGroupLaw(Series2::x(field, N) + Series2::y(field, N));
}

FormalGroupLaw FormalGroupLaw::multiplicative(const FieldPtr& field, std::size_t N) {
  auto x = Series2::x(field, N), y = Series2::y(field, N);
  return FormalGroupLaw(x + y + x * y);
}

FglCheck fgl_check(const Series2& F0, std::size_t N) {
  if (N < 2) throw std::invalid_argument("fgl_check needs N >= 2");
  if (F0.order() < N) throw std::invalid_argument("law is truncated below the requested order");
  const Series2 F = truncated(F0, N);
  const Field& fld = *F.field();
  FglCheck r;
  auto fail = [&](const std::string& what) {
    r.valid = false;
    r.violations.push_back(what);
  };
  for (std::size_t i = 0; i <= N; ++i)
    if (F.at(i, 0) != (i == 1 ? 1u : 0u)) {
      fail("F(x,0)=x violated at " + monomial_name(i, 0));
      break;
    }
  for (std::size_t j = 0; j <= N; ++j)
    if (F.at(0, j) != (j == 1 ? 1u : 0u)) {
      fail("F(0,y)=y violated at " + monomial_name(0, j));
      break;
    }
  [&] {
    for (std::size_t d = 0; d <= N; ++d)
      for (std::size_t i = d + 1; i-- > 0;)
        if (F.at(i, d - i) != F.at(d - i, i)) {
          fail("F(x,y)=F(y,x) violated at " + monomial_name(i, d - i));
          return;
        }
  }();

  // F(F(x,y),z) and F(x,F(y,z)) as trivariate series.
  std::vector<Series2> powers{Series2::constant(F.field(), N, 1)};
  for (std::size_t a = 1; a <= N; ++a) powers.push_back(powers.back() * F);
  Tri left(N), right(N);
  for (std::size_t a = 0; a <= N; ++a)
    for (std::size_t b = 0; a + b <= N; ++b) {
      const std::uint32_t c = F.at(a, b);
      if (!c) continue;
      const Series2& G = powers[a];
      const Series2& H = powers[b];
      for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j + b <= N; ++j)
          if (G.at(i, j)) left.at(i, j, b) = fld.add(left.at(i, j, b), fld.mul(c, G.at(i, j)));
      for (std::size_t j = 0; j + a <= N; ++j)
        for (std::size_t k = 0; a + j + k <= N; ++k)
          if (H.at(j, k)) right.at(a, j, k) = fld.add(right.at(a, j, k), fld.mul(c, H.at(j, k)));
    }
  [&] {
    for (std::size_t d = 0; d <= N; ++d)
      for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; i + j <= d; ++j) {
          const std::size_t k = d - i - j;
          if (left.at(i, j, k) != right.at(i, j, k)) {
            fail("associativity violated at " + monomial_name(i, j, k));
            return;
          }
        }
  }();
  return r;
}

Series1 mult_by(std::uint64_t m, const FormalGroupLaw& F) {
  if (m == 0) throw std::invalid_argument("mult_by needs m >= 1");
  const Series1 t = Series1::variable(F.field(), F.order());
  Series1 acc = t;
  for (std::uint64_t k = 1; k < m; ++k) acc = F.series().compose(acc, t);
  return acc;
}

const char* height_kind_name(HeightKind k) {
  switch (k) {
    case HeightKind::Exact: return "exact";
    case HeightKind::AtLeast: return "at-least";
    case HeightKind::InfiniteWithinTruncation: return "infinite-within-truncation";
  }
  return "?";
}

HeightReport height_of(const FormalGroupLaw& F, unsigned hmax) {
  const std::uint32_t p = F.field()->p();
  HeightReport r;
  r.p_series = mult_by(p, F);
  const std::size_t N = F.order();
  const std::size_t v = r.p_series.valuation();
  if (v <= N) {
    std::size_t deg = 1;
    unsigned h = 0;
    while (deg < v) {
      deg *= p;
      ++h;
    }
    if (deg != v)
      throw std::runtime_error("first nonzero term of [p](t) at degree " + std::to_string(v) +
                               ", which is not a power of p");
    r.kind = HeightKind::Exact;
    r.h = h;
    r.leading = FieldElement(F.field(), r.p_series[v]);
    return r;
  }
  unsigned bound = 0;
  std::size_t deg = 1;
  while (deg * p <= N) {
    deg *= p;
    ++bound;
  }
  r.h = bound + 1;
  std::size_t need = 1;
  for (unsigned i = 0; i < hmax; ++i) need *= p;
  r.kind = N >= need + 1 ? HeightKind::InfiniteWithinTruncation : HeightKind::AtLeast;
  return r;
}

Series1 compositional_inverse(const Series1& phi) {
  const auto& f = *phi.field();
  if (phi[0] != 0 || phi[1] == 0) throw std::invalid_argument("series is not invertible under composition");
  const std::size_t N = phi.order();
  // Fixed point psi <- psi + (t - phi(psi)) / c_1, gaining a degree per step.
  const std::uint32_t inv1 = f.inv(phi[1]);
  const Series1 t = Series1::variable(phi.field(), N);
  Series1 psi = t.scaled(inv1);
  for (std::size_t it = 0; it < N; ++it) {
    Series1 comp(phi.field(), N), power = Series1(phi.field(), N);
    power.coeff(0) = 1;
    for (std::size_t k = 1; k <= N; ++k) {
      power = power * psi;
      if (phi[k]) comp = comp + power.scaled(phi[k]);
    }
    psi = psi + (t - comp).scaled(inv1);
  }
  return psi;
}

FormalGroupLaw conjugate(const FormalGroupLaw& F, const Series1& phi) {
  const std::size_t N = F.order();
  if (phi.order() != N) throw std::invalid_argument("series truncation mismatch");
  const FieldPtr& fld = F.field();
  const Field& f = *fld;
  const Series1 psi = compositional_inverse(phi);
  std::vector<Series1> ppow{Series1(fld, N)};
  ppow[0].coeff(0) = 1;
  for (std::size_t k = 1; k <= N; ++k) ppow.push_back(ppow.back() * phi);
  Series2 G(fld, N);  // F(phi(x), phi(y))
  for (std::size_t a = 0; a <= N; ++a)
    for (std::size_t b = 0; a + b <= N; ++b) {
      const std::uint32_t c = F.series().at(a, b);
      if (!c) continue;
      for (std::size_t i = a; i <= N; ++i) {
        if (!ppow[a][i]) continue;
        for (std::size_t j = b; i + j <= N; ++j)
          if (ppow[b][j]) G.set(i, j, f.add(G.at(i, j), f.mul(c, f.mul(ppow[a][i], ppow[b][j]))));
      }
    }
  Series2 out(fld, N), power = Series2::constant(fld, N, 1);
  for (std::size_t k = 1; k <= N; ++k) {
    power = power * G;
    if (psi[k]) out = out + power.scaled(psi[k]);
  }
  return FormalGroupLaw(out);
}

}  // namespace fbh
