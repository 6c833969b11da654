#pragma once

// Dense truncated power series over F_q: univariate in t, bivariate in x, y.
// A series truncated at N keeps every term of total degree <= N.

#include <cstdint>
#include <string>
#include <vector>

#include "fbh/field.hpp"

namespace fbh {

class Series1 {
 public:
  Series1() = default;
  Series1(FieldPtr field, std::size_t N) : field_(std::move(field)), c_(N + 1, 0) {}

  static Series1 variable(const FieldPtr& field, std::size_t N);

  const FieldPtr& field() const { return field_; }
  std::size_t order() const { return c_.size() - 1; }
  std::uint32_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t& coeff(std::size_t i) { return c_.at(i); }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  // Degree of the first nonzero term, or order()+1 if zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  Series1 operator+(const Series1& o) const;
  Series1 operator-(const Series1& o) const;
  Series1 operator*(const Series1& o) const;
  Series1 scaled(std::uint32_t a) const;
  bool operator==(const Series1& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "t", std::size_t max_terms = 16) const;

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> c_;
};

class Series2 {
 public:
  Series2() = default;
  Series2(FieldPtr field, std::size_t N) : field_(std::move(field)), N_(N), c_((N + 1) * (N + 1), 0) {}

  static Series2 x(const FieldPtr& field, std::size_t N);
  static Series2 y(const FieldPtr& field, std::size_t N);
  static Series2 constant(const FieldPtr& field, std::size_t N, std::uint32_t a);

  const FieldPtr& field() const { return field_; }
  std::size_t order() const { return N_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return i + j <= N_ ? c_[i * (N_ + 1) + j] : 0; }
  void set(std::size_t i, std::size_t j, std::uint32_t v);

  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator*(const Series2& o) const;
  Series2 scaled(std::uint32_t a) const;
  // Multiplicative inverse; the constant term must be nonzero.
  Series2 inverse() const;
  // F(y, x).
  Series2 swapped() const;
  bool operator==(const Series2& o) const { return N_ == o.N_ && c_ == o.c_; }

  // F(a(t), b(t)) for univariate a, b without constant terms.
  Series1 compose(const Series1& a, const Series1& b) const;
  // F(x, 0) and F(0, y) as univariate series.
  Series1 restrict_x() const;
  Series1 restrict_y() const;

  std::string to_string(std::size_t max_terms = 24) const;

 private:
  FieldPtr field_;
  std::size_t N_ = 0;
  std::vector<std::uint32_t> c_;
};

}  // namespace fbh
