#pragma once

// Polynomial input: variables x0..x9, the field generator t, integers,
// + - * ^ and parentheses.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fbh/laurent.hpp"

namespace fbh {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + msg), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// nvars = 0 takes one more than the largest variable index used.
LaurentPoly parse_poly(std::string_view text, const FieldPtr& field, std::size_t nvars = 0);

FieldElement parse_field_element(std::string_view text, const FieldPtr& field);

}  // namespace fbh
