#pragma once

// Truncated Witt vectors W_n(A) over a commutative ring A.
//
// A is any of FieldElement, LaurentPoly or ZmodInt (or another type with the
// same free helpers: zero_like, scalar_like, characteristic, pow, frobenius).
// Sums and products evaluate the integer structural polynomials reduced
// modulo characteristic(A). Over F_q the ring operations go through the
// Galois ring model instead, which stays cheap for long vectors.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fbh/field.hpp"
#include "fbh/galois_ring.hpp"
#include "fbh/laurent.hpp"
#include "fbh/structural.hpp"
#include "fbh/zmod.hpp"

namespace fbh {

template <class R>
class WittVector {
 public:
  WittVector() = default;
  WittVector(std::uint32_t p, std::vector<R> components) : p_(p), c_(std::move(components)) {
    if (c_.empty()) throw std::invalid_argument("Witt vector of length 0");
  }

  static WittVector zero(std::uint32_t p, std::size_t n, const R& like) {
    return WittVector(p, std::vector<R>(n, zero_like(like)));
  }
  static WittVector one(std::uint32_t p, std::size_t n, const R& like) {
    std::vector<R> c(n, zero_like(like));
    c[0] = scalar_like(like, 1);
    return WittVector(p, std::move(c));
  }
  // The Teichmuller representative (a, 0, ..., 0).
  static WittVector teichmuller(std::uint32_t p, std::size_t n, const R& a) {
    std::vector<R> c(n, zero_like(a));
    c[0] = a;
    return WittVector(p, std::move(c));
  }

  std::uint32_t prime() const { return p_; }
  std::size_t length() const { return c_.size(); }
  const std::vector<R>& components() const { return c_; }
  const R& operator[](std::size_t i) const { return c_.at(i); }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const WittVector& o) const { return p_ == o.p_ && c_ == o.c_; }

 private:
  std::uint32_t p_ = 0;
  std::vector<R> c_;
};

namespace detail {

inline LaurentPoly witt_scale(const LaurentPoly& x, std::uint64_t c) {
  return x.scaled(x.field()->from_int(std::int64_t(c % x.field()->p())));
}
inline FieldElement witt_scale(const FieldElement& x, std::uint64_t c) {
  return x * FieldElement::from_int(x.field(), std::int64_t(c % x.field()->p()));
}
template <class R>
R witt_scale(const R& x, std::uint64_t c) {
  return x * scalar_like(x, std::int64_t(c));
}

template <class R>
std::vector<R> eval_structural(const std::vector<ReducedPoly>& polys, const std::vector<R>& x,
                               const std::vector<R>& y) {
  std::map<std::pair<std::uint16_t, std::uint32_t>, R> powers;
  auto power = [&](std::uint16_t var, std::uint32_t e) -> const R& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const R& base = (var % 2 == 0) ? x[var / 2] : y[var / 2];
    return powers.emplace(key, e == 1 ? base : pow(base, e)).first->second;
  };
  std::vector<R> out;
  out.reserve(polys.size());
  for (const auto& poly : polys) {
    R acc = zero_like(x[0]);
    for (const auto& term : poly) {
      bool vanishes = false;
      for (const auto& [var, e] : term.factors) {
        const R& base = (var % 2 == 0) ? x[var / 2] : y[var / 2];
        if (base.is_zero()) {
          vanishes = true;
          break;
        }
      }
      if (vanishes) continue;
      if (term.factors.empty()) {
        acc = acc + witt_scale(scalar_like(x[0], 1), term.coeff);
        continue;
      }
      R prod = power(term.factors[0].first, term.factors[0].second);
      for (std::size_t i = 1; i < term.factors.size(); ++i)
        prod = prod * power(term.factors[i].first, term.factors[i].second);
      acc = acc + witt_scale(prod, term.coeff);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template <class R>
void check_compatible(const WittVector<R>& a, const WittVector<R>& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("Witt vectors over different primes");
  if (a.length() != b.length())
    throw std::invalid_argument("Witt length mismatch: " + std::to_string(a.length()) + " vs " +
                                std::to_string(b.length()));
}

}  // namespace detail

// Ring operations through the structural polynomials, for every ring type.
template <class R>
WittVector<R> witt_op_structural(WittOp op, const WittVector<R>& a, const WittVector<R>& b) {
  detail::check_compatible(a, b);
  auto polys = reduced_structural(a.prime(), op, a.length(), std::uint64_t(characteristic(a[0])));
  return WittVector<R>(a.prime(), detail::eval_structural(*polys, a.components(), b.components()));
}

template <class R>
WittVector<R> witt_op(WittOp op, const WittVector<R>& a, const WittVector<R>& b) {
  if constexpr (std::is_same_v<R, FieldElement>) {
    detail::check_compatible(a, b);
    if (a.length() == 1) {
      const FieldElement &x = a[0], &y = b[0];
      return WittVector<R>(a.prime(), {op == WittOp::Sum ? x + y : op == WittOp::Difference ? x - y : x * y});
    }
    return WittVector<R>(a.prime(), witt_field_op(op, a.components(), b.components()));
  } else {
    return witt_op_structural(op, a, b);
  }
}

template <class R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b) {
  return witt_op(WittOp::Sum, a, b);
}
template <class R>
WittVector<R> witt_sub(const WittVector<R>& a, const WittVector<R>& b) {
  return witt_op(WittOp::Difference, a, b);
}
template <class R>
WittVector<R> witt_mul(const WittVector<R>& a, const WittVector<R>& b) {
  return witt_op(WittOp::Product, a, b);
}
template <class R>
WittVector<R> witt_neg(const WittVector<R>& a) {
  return witt_sub(WittVector<R>::zero(a.prime(), a.length(), a[0]), a);
}

template <class R>
WittVector<R> operator+(const WittVector<R>& a, const WittVector<R>& b) {
  return witt_add(a, b);
}
template <class R>
WittVector<R> operator-(const WittVector<R>& a, const WittVector<R>& b) {
  return witt_sub(a, b);
}
template <class R>
WittVector<R> operator*(const WittVector<R>& a, const WittVector<R>& b) {
  return witt_mul(a, b);
}

// F(a_0, ..., a_{n-1}) = (a_0^p, ..., a_{n-1}^p) over rings of characteristic p.
template <class R>
WittVector<R> witt_F(const WittVector<R>& a) {
  if (std::uint64_t(characteristic(a[0])) != a.prime())
    throw std::domain_error("Witt Frobenius needs a ring of characteristic " + std::to_string(a.prime()));
  std::vector<R> c;
  c.reserve(a.length());
  for (const auto& x : a.components()) c.push_back(frobenius(x));
  return WittVector<R>(a.prime(), std::move(c));
}

// V(a_0, ..., a_{n-1}) = (0, a_0, ..., a_{n-1}), one longer.
template <class R>
WittVector<R> witt_V(const WittVector<R>& a) {
  std::vector<R> c;
  c.reserve(a.length() + 1);
  c.push_back(zero_like(a[0]));
  for (const auto& x : a.components()) c.push_back(x);
  return WittVector<R>(a.prime(), std::move(c));
}

// R(a_0, ..., a_n) = (a_0, ..., a_{n-1}), one shorter.
template <class R>
WittVector<R> witt_R(const WittVector<R>& a) {
  if (a.length() < 2) throw std::invalid_argument("restriction needs Witt length >= 2");
  std::vector<R> c(a.components().begin(), a.components().end() - 1);
  return WittVector<R>(a.prime(), std::move(c));
}

// Truncation to the first n components.
template <class R>
WittVector<R> witt_truncate(const WittVector<R>& a, std::size_t n) {
  if (n == 0 || n > a.length()) throw std::invalid_argument("bad truncation length");
  std::vector<R> c(a.components().begin(), a.components().begin() + std::ptrdiff_t(n));
  return WittVector<R>(a.prime(), std::move(c));
}

// Extension by zero components to length n.
template <class R>
WittVector<R> witt_extend(const WittVector<R>& a, std::size_t n) {
  if (n < a.length()) throw std::invalid_argument("bad extension length");
  std::vector<R> c = a.components();
  c.resize(n, zero_like(a[0]));
  return WittVector<R>(a.prime(), std::move(c));
}

// Multiplication by the Teichmuller lift [c] of a scalar c:
// [c] * (a_0, a_1, ...) = (c a_0, c^p a_1, c^{p^2} a_2, ...).
inline WittVector<LaurentPoly> teichmuller_times(const FieldElement& c, const WittVector<LaurentPoly>& a) {
  std::vector<LaurentPoly> out;
  FieldElement ck = c;
  for (const auto& x : a.components()) {
    out.push_back(x.scaled(ck.raw()));
    ck = ck.frobenius();
  }
  return WittVector<LaurentPoly>(a.prime(), std::move(out));
}

inline WittVector<FieldElement> teichmuller_times(const FieldElement& c, const WittVector<FieldElement>& a) {
  std::vector<FieldElement> out;
  FieldElement ck = c;
  for (const auto& x : a.components()) {
    out.push_back(x * ck);
    ck = ck.frobenius();
  }
  return WittVector<FieldElement>(a.prime(), std::move(out));
}

// w_k(a) = sum_{i<=k} p^i a_i^{p^{k-i}}, for rings where integers act.
template <class R>
std::vector<R> ghost_vector(const WittVector<R>& a) {
  std::vector<R> out;
  for (std::size_t k = 0; k < a.length(); ++k) {
    R acc = zero_like(a[0]);
    std::uint64_t pi = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      std::uint64_t e = 1;
      for (std::size_t j = i; j < k; ++j) e *= a.prime();
      acc = acc + pow(a[i], e) * scalar_like(a[0], std::int64_t(pi));
      pi *= a.prime();
    }
    out.push_back(acc);
  }
  return out;
}

template <class R>
std::string to_string(const WittVector<R>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) s += ", ";
    s += a[i].to_string();
  }
  return s + ")";
}

}  // namespace fbh
