#include "fbh/lubin_tate.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace fbh {

namespace {

struct ModBi {
  std::size_t N;
  std::vector<mpz_class> c;
  explicit ModBi(std::size_t n) : N(n), c((n + 1) * (n + 1), 0) {}
  mpz_class& at(std::size_t i, std::size_t j) { return c[i * (N + 1) + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return c[i * (N + 1) + j]; }
};

ModBi mul(const ModBi& a, const ModBi& b, const mpz_class& M) {
  const std::size_t N = a.N;
  ModBi r(N);
  for (std::size_t i1 = 0; i1 <= N; ++i1)
    for (std::size_t j1 = 0; i1 + j1 <= N; ++j1) {
      const mpz_class& x = a.at(i1, j1);
      if (x == 0) continue;
      for (std::size_t i2 = 0; i1 + j1 + i2 <= N; ++i2)
        for (std::size_t j2 = 0; i1 + j1 + i2 + j2 <= N; ++j2) {
          const mpz_class& y = b.at(i2, j2);
          if (y == 0) continue;
          mpz_addmul(r.at(i1 + i2, j1 + j2).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
    }
  for (auto& v : r.c) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
  return r;
}

ModBi power(ModBi base, std::uint64_t e, const mpz_class& M) {
  ModBi r(base.N);
  r.at(0, 0) = 1;
  while (e) {
    if (e & 1) r = mul(r, base, M);
    e >>= 1;
    if (e) base = mul(base, base, M);
  }
  return r;
}

}  // namespace

FormalGroupLaw lubin_tate(std::uint32_t p, unsigned h, std::size_t N) {
  if (!is_prime(p)) throw std::invalid_argument("Lubin-Tate needs a prime");
  if (h == 0) throw std::invalid_argument("Lubin-Tate height must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) q *= p;
  if (N < q + 1)
    throw std::invalid_argument("truncation too small: Lubin-Tate of height " + std::to_string(h) + " needs N >= " +
                                std::to_string(q + 1));
  mpz_class M;
  mpz_ui_pow_ui(M.get_mpz_t(), p, N + 1);
  const mpz_class P(p);

  // A_i = f(t)^i as univariate series mod M.
  std::vector<std::vector<mpz_class>> A(N + 1, std::vector<mpz_class>(N + 1, 0));
  A[0][0] = 1;
  std::vector<mpz_class> f(N + 1, 0);
  f[1] = P;
  if (q <= N) f[q] += 1;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t a = 0; a <= N; ++a) {
      if (A[i - 1][a] == 0) continue;
      for (std::size_t b = 1; a + b <= N; ++b)
        if (f[b] != 0) A[i][a + b] += A[i - 1][a] * f[b];
      for (auto& v : A[i]) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    }

  ModBi F(N);
  F.at(1, 0) = 1;
  F.at(0, 1) = 1;
  ModBi Fq(N);
  std::size_t fq_valid = q - 1;  // Fq is zero, which is right through degree q-1
  for (std::size_t k = 2; k <= N; ++k) {
    if (k > fq_valid) {
      Fq = power(F, q, M);
      fq_valid = k - 1 + q - 1;
    }
    mpz_class unit = 1;
    mpz_class pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), p, k - 1);
    unit -= pk1;
    mpz_class unit_inv;
    mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), M.get_mpz_t());
    for (std::size_t a = 0; a <= k; ++a) {
      const std::size_t b = k - a;
      // [F_{<k}(f(x), f(y))] at x^a y^b.
      mpz_class rhs = 0;
      for (std::size_t i = 0; i <= a; ++i)
        for (std::size_t j = 0; j <= b && i + j < k; ++j) {
          const mpz_class& c = F.at(i, j);
          if (c == 0 || A[i][a] == 0 || A[j][b] == 0) continue;
          rhs += c * A[i][a] * A[j][b];
        }
      rhs -= Fq.at(a, b);
      mpz_mod(rhs.get_mpz_t(), rhs.get_mpz_t(), M.get_mpz_t());
      if (!mpz_divisible_p(rhs.get_mpz_t(), P.get_mpz_t()))
        throw std::logic_error("Lubin-Tate recursion: coefficient not divisible by p");
      mpz_class e;
      mpz_divexact(e.get_mpz_t(), rhs.get_mpz_t(), P.get_mpz_t());
      e *= unit_inv;
      mpz_mod(e.get_mpz_t(), e.get_mpz_t(), M.get_mpz_t());
      F.at(a, b) = e;
    }
  }

  auto field = Field::make(p);
  Series2 out(field, N);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; i + j <= N; ++j) {
      mpz_class r = F.at(i, j) % P;
      out.set(i, j, std::uint32_t(r.get_ui()));
    }
  return FormalGroupLaw(out);
}

}  // namespace fbh
