#include "fbh/elliptic.hpp"

#include <stdexcept>

namespace fbh {

namespace {

void require_curve(const FieldElement& a4, const FieldElement& a6) {
  if (!a4.field()->same_as(*a6.field())) throw std::invalid_argument("a4 and a6 lie in different fields");
  if (a4.field()->p() < 5) throw std::invalid_argument("short Weierstrass curves need characteristic >= 5");
  if (!is_nonsingular(a4, a6)) throw std::invalid_argument("singular curve: 4a4^3 + 27a6^2 = 0");
}

}  // namespace

bool is_nonsingular(const FieldElement& a4, const FieldElement& a6) {
  const FieldPtr& f = a4.field();
  FieldElement disc = FieldElement::from_int(f, 4) * a4.pow(3) + FieldElement::from_int(f, 27) * a6.pow(2);
  return !disc.is_zero();
}

FormalGroupLaw ec_fgl(const FieldElement& a4, const FieldElement& a6, std::size_t N) {
  require_curve(a4, a6);
  const FieldPtr& fld = a4.field();
  const Field& f = *fld;
  // w(z) = z^3 + a4 z w^2 + a6 w^3, solved to degree N + 1.
  const std::size_t M = N + 1;
  Series1 z = Series1::variable(fld, M), z3 = z * z * z;
  Series1 w = z3;
  for (std::size_t it = 0; it <= M; ++it) {
    Series1 next = z3 + (z * w * w).scaled(a4.raw()) + (w * w * w).scaled(a6.raw());
    if (next == w) break;
    w = next;
  }
  // lambda = (w(z2) - w(z1)) / (z2 - z1), nu = w(z1) - lambda z1.
  Series2 lambda(fld, N), w1(fld, N);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; i + j <= N; ++j) lambda.set(i, j, w[i + j + 1]);
  for (std::size_t i = 0; i <= N; ++i) w1.set(i, 0, w[i]);
  const Series2 x = Series2::x(fld, N), y = Series2::y(fld, N);
  const Series2 nu = w1 - lambda * x;
  const Series2 l2 = lambda * lambda;
  const Series2 numerator = (lambda * nu).scaled(f.mul(f.from_int(2), a4.raw())) +
                            (l2 * nu).scaled(f.mul(f.from_int(3), a6.raw()));
  const Series2 denominator =
      Series2::constant(fld, N, 1) + l2.scaled(a4.raw()) + (l2 * lambda).scaled(a6.raw());
  return FormalGroupLaw(x + y + numerator * denominator.inverse());
}

FieldElement hasse_invariant(const FieldElement& a4, const FieldElement& a6) {
  require_curve(a4, a6);
  const FieldPtr& fld = a4.field();
  const Field& f = *fld;
  const std::uint32_t p = f.p();
  const std::uint32_t m = (p - 1) / 2;
  // Terms a4^j a6^k x^{3i+j} of the multinomial expansion with 3i + j = p - 1.
  std::vector<std::uint32_t> fact(m + 1, 1), pa4(m + 1, 1), pa6(m + 1, 1);
  for (std::uint32_t k = 1; k <= m; ++k) {
    fact[k] = f.mul(fact[k - 1], f.from_int(k));
    pa4[k] = f.mul(pa4[k - 1], a4.raw());
    pa6[k] = f.mul(pa6[k - 1], a6.raw());
  }
  std::uint32_t acc = 0;
  for (std::uint32_t i = 0; 3 * i <= p - 1; ++i) {
    const std::uint32_t j = p - 1 - 3 * i;
    if (i + j > m) continue;
    const std::uint32_t k = m - i - j;
    const std::uint32_t denom = f.mul(f.mul(fact[i], fact[j]), fact[k]);
    acc = f.add(acc, f.mul(f.div(fact[m], denom), f.mul(pa4[j], pa6[k])));
  }
  return FieldElement(fld, acc);
}

}  // namespace fbh
