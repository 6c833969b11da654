#pragma once

// Multivariate polynomials over Z with GMP coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fbh {

class IntPoly {
 public:
  using Exps = std::vector<std::uint32_t>;

  IntPoly() = default;
  explicit IntPoly(std::size_t nvars) : nvars_(nvars) {}

  static IntPoly constant(std::size_t nvars, const mpz_class& c);
  static IntPoly variable(std::size_t nvars, std::size_t var);
  static IntPoly monomial(const Exps& e, const mpz_class& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exps, mpz_class>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Exps& e) const;
  std::size_t degree() const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const mpz_class& c) const;
  IntPoly pow(std::uint64_t e) const;
  bool operator==(const IntPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Exact division of every coefficient by m; throws std::domain_error if
  // some coefficient is not divisible.
  IntPoly divexact(const mpz_class& m) const;
  // Same polynomial viewed in a ring with more variables.
  IntPoly extended(std::size_t nvars) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  // Line-oriented text form: "nvars" then one "coeff e0 e1 ..." per term.
  std::string serialize() const;
  static IntPoly deserialize(const std::string& text);

 private:
  void add_term(const Exps& e, const mpz_class& c);

  std::size_t nvars_ = 0;
  std::map<Exps, mpz_class> terms_;
};

}  // namespace fbh
