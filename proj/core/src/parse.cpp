#include "fbh/parse.hpp"

#include <cctype>
#include <vector>

namespace fbh {

namespace {

class Parser {
 public:
  Parser(std::string_view s, FieldPtr field, std::size_t nvars) : s_(s), field_(std::move(field)), nvars_(nvars) {}

  LaurentPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty input");
    LaurentPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + std::uint64_t(s_[pos_] - '0');
      if (v > (std::uint64_t(1) << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  LaurentPoly power() {
    LaurentPoly base = unary();
    if (eat('^')) return base.pow(integer());
    return base;
  }

  LaurentPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  LaurentPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return LaurentPoly::constant(field_, nvars_, field_->from_int(std::int64_t(v % field_->p())));
    }
    if (c == 't') {
      if (field_->degree() == 1) fail("t is only available over extension fields");
      ++pos_;
      return LaurentPoly::constant(field_, nvars_, field_->generator());
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a variable index");
      const std::size_t v = std::size_t(s_[pos_] - '0');
      ++pos_;
      if (v >= nvars_) fail("variable x" + std::to_string(v) + " out of range");
      return LaurentPoly::variable(field_, nvars_, v);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  FieldPtr field_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::size_t count_vars(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == 'x' && std::isdigit(static_cast<unsigned char>(s[i + 1])))
      n = std::max(n, std::size_t(s[i + 1] - '0') + 1);
  return n;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, const FieldPtr& field, std::size_t nvars) {
  if (nvars == 0) nvars = std::max<std::size_t>(count_vars(text), 1);
  return Parser(text, field, nvars).run();
}

FieldElement parse_field_element(std::string_view text, const FieldPtr& field) {
  LaurentPoly v = Parser(text, field, 1).run();
  if (v.is_zero()) return {field, 0};
  if (v.size() != 1 || v.terms()[0].key != mono::kZeroKey) throw ParseError("expected a field element", 1);
  return {field, v.terms()[0].coeff};
}

}  // namespace fbh
