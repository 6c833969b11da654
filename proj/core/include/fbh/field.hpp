#pragma once

// Finite fields F_q = F_p[t]/(g) with table-driven arithmetic.
//
// Elements are encoded as integers in [0, q): for d > 1 the coordinates
// (c_0, ..., c_{d-1}) of c_0 + c_1 t + ... are the base-p digits, constant
// term least significant. For d = 1 the encoding is the residue itself.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fbh {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
  struct Private {};

 public:
  // Builds F_{p^d}. When `modulus` is absent and d > 1 the first irreducible
  // monic polynomial in lexicographic coefficient order (c_{d-1}, ..., c_0)
  // is used. `modulus` is given low-to-high including the leading 1.
  static FieldPtr make(std::uint32_t p, unsigned d = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  Field(Private, std::uint32_t p, unsigned d, std::vector<std::uint32_t> modulus);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return d_; }
  std::uint64_t order() const { return q_; }
  // Monic modulus, low-to-high, size d+1. For d = 1 this is {0, 1}.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool same_as(const Field& other) const;

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }
  // The class of t. For prime fields this is 0 (t is not a generator there).
  std::uint32_t generator() const { return d_ > 1 ? p_ : 0; }
  std::uint32_t from_int(std::int64_t v) const;
  std::uint32_t from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(std::uint32_t a) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (d_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (d_ == 1) return std::uint32_t((std::uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a) const { return d_ == 1 ? a : frob_[a]; }
  std::uint32_t frobenius_inverse(std::uint32_t a) const { return d_ == 1 ? a : frob_inv_[a]; }

  // Human-readable form: "0", "3", "t+1", "2*t^2+t".
  std::string format(std::uint32_t a) const;
  // Field description, e.g. "F_5" or "F_4[t^2+t+1]".
  std::string describe() const;

 private:
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned d_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> frob_;
  std::vector<std::uint32_t> frob_inv_;
};

bool is_prime(std::uint64_t n);

// Checks irreducibility of a monic polynomial over F_p (low-to-high
// coefficients) by exhaustive search for monic factors of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

// Value type pairing an encoded element with its field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::uint32_t raw) : field_(std::move(field)), raw_(raw) {}

  static FieldElement from_int(const FieldPtr& f, std::int64_t v) { return {f, f->from_int(v)}; }
  static FieldElement generator(const FieldPtr& f) { return {f, f->generator()}; }

  const FieldPtr& field() const { return field_; }
  std::uint32_t raw() const { return raw_; }
  bool is_zero() const { return raw_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(raw_)}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(raw_, e)}; }
  FieldElement inverse() const { return {field_, field_->inv(raw_)}; }
  FieldElement frobenius() const { return {field_, field_->frobenius(raw_)}; }

  bool operator==(const FieldElement& o) const { return raw_ == o.raw_ && field_->same_as(*o.field_); }
  std::string to_string() const { return field_->format(raw_); }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  std::uint32_t raw_ = 0;
};

}  // namespace fbh
