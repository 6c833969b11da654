#pragma once

// Galois rings GR(p^m, d) = (Z/p^m)[t]/(g~), the unramified extensions of
// Z/p^m, used as a model of W_m(F_q) for q = p^d. g~ is the modulus of F_q
// read as an integer polynomial.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fbh/field.hpp"

namespace fbh {

class GaloisRing {
 public:
  using Elem = std::vector<std::int64_t>;  // d coefficients in [0, p^m)

  GaloisRing(FieldPtr field, unsigned m);
  // Shared instance per (field, m).
  static std::shared_ptr<const GaloisRing> get(const FieldPtr& field, unsigned m);

  const FieldPtr& field() const { return field_; }
  unsigned length() const { return m_; }
  std::int64_t modulus() const { return mod_; }
  unsigned degree() const { return d_; }

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const;
  Elem from_int(std::int64_t v) const;
  bool is_zero(const Elem& x) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::int64_t c) const;
  Elem pow(Elem a, std::uint64_t e) const;

  // p-adic valuation, m for zero.
  unsigned valuation(const Elem& x) const;
  bool is_unit(const Elem& x) const { return valuation(x) == 0; }
  Elem unit_inverse(const Elem& x) const;
  // x / p^k, requires valuation(x) >= k; the result is determined mod p^{m-k}.
  Elem div_p_power(const Elem& x, unsigned k) const;

  Elem sigma(const Elem& x) const;
  Elem sigma_inverse(const Elem& x) const;

  std::uint32_t residue(const Elem& x) const;
  Elem lift(std::uint32_t a) const;
  Elem teichmuller(std::uint32_t a) const;

  // (a_0, ..., a_{m-1}) -> sum_k p^k [a_k^{p^{-k}}], and its inverse.
  Elem from_witt(std::span<const FieldElement> a) const;
  std::vector<FieldElement> to_witt(const Elem& x) const;

 private:
  Elem apply_sigma(const Elem& x, const std::vector<Elem>& images) const;

  FieldPtr field_;
  unsigned m_;
  unsigned d_;
  std::uint32_t p_;
  std::int64_t mod_;
  std::vector<std::int64_t> g_;  // monic, low-to-high, size d+1
  std::vector<Elem> sigma_t_;    // sigma(t)^j, j < d
  std::vector<Elem> sigma_inv_t_;
};

enum class WittOp;

// Witt vector arithmetic over F_q through GR(p^n, d); a and b have length n.
std::vector<FieldElement> witt_field_op(WittOp op, std::span<const FieldElement> a, std::span<const FieldElement> b);

}  // namespace fbh
