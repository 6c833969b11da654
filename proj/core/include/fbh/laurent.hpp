#pragma once

// Sparse multivariate Laurent polynomials over a finite field.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fbh/field.hpp"
#include "fbh/monomial.hpp"

namespace fbh {

class LaurentPoly {
 public:
  struct Term {
    MonoKey key;
    std::uint32_t coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(FieldPtr field, std::size_t nvars);

  static LaurentPoly constant(const FieldPtr& field, std::size_t nvars, std::uint32_t c);
  static LaurentPoly monomial(const FieldPtr& field, std::span<const int> exps, std::uint32_t c = 1);
  static LaurentPoly variable(const FieldPtr& field, std::size_t nvars, std::size_t var);
  // Terms may be unsorted and contain duplicates or zeros; they are normalised.
  static LaurentPoly from_terms(const FieldPtr& field, std::size_t nvars, std::vector<Term> terms);

  const FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  FieldElement coefficient(std::span<const int> e) const;
  std::uint32_t coefficient_raw(MonoKey k) const;
  std::vector<int> exponents(std::size_t i) const { return mono::unpack(terms_[i].key, nvars_); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;

  LaurentPoly scaled(std::uint32_t c) const;
  LaurentPoly times_monomial(MonoKey k, std::uint32_t c = 1) const;
  LaurentPoly pow(std::uint64_t e) const;
  // Absolute Frobenius: coefficientwise x -> x^p and exponents times p.
  LaurentPoly frobenius() const;
  LaurentPoly derivative(std::size_t var) const;

  // Exact quotient by f in the Laurent ring; nullopt when f does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& f) const;

  int min_exponent(std::size_t var) const;
  int max_exponent(std::size_t var) const;
  // Largest pole order over all variables (0 for polynomials).
  int pole_order() const;
  bool is_homogeneous(int degree) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_compatible(const LaurentPoly& o) const;

  FieldPtr field_;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // strictly increasing keys, nonzero coefficients
};

LaurentPoly zero_like(const LaurentPoly& x);
LaurentPoly scalar_like(const LaurentPoly& x, std::int64_t v);
inline std::uint32_t characteristic(const LaurentPoly& x) { return x.field()->p(); }
inline LaurentPoly pow(const LaurentPoly& x, std::uint64_t e) { return x.pow(e); }
inline LaurentPoly frobenius(const LaurentPoly& x) { return x.frobenius(); }

FieldElement zero_like(const FieldElement& x);
FieldElement scalar_like(const FieldElement& x, std::int64_t v);
inline std::uint32_t characteristic(const FieldElement& x) { return x.field()->p(); }
inline FieldElement pow(const FieldElement& x, std::uint64_t e) { return x.pow(e); }
inline FieldElement frobenius(const FieldElement& x) { return x.frobenius(); }

}  // namespace fbh
