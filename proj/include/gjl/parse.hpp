#ifndef GJL_PARSE_HPP
#define GJL_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gjl/syntax.hpp"

namespace gjl {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, std::string message, std::vector<std::string> expected);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Grammar (tightest to loosest): unary "~", "!", "?", "t :", "[]";
// "&" left-associative; "->" right-associative. In terms, "*" binds tighter
// than "+", both left-associative. "t : phi" applies to the smallest
// following formula. "top" is sugar for (bot -> bot).
JFormula parse_jformula(std::string_view text); // throws ParseError
MFormula parse_mformula(std::string_view text); // throws ParseError
Term parse_term(std::string_view text);         // throws ParseError

} // namespace gjl

#endif
