#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sunit/ratfunc.hpp"

namespace sunit {

/// Parsed arithmetic over F_q(T). `a` names the generator of F_q over F_p
/// when the field is not prime.
struct Expr {
  enum class Kind { Constant, Variable, Generator, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  Field::Elem value = 0;      // Constant
  std::int64_t exponent = 0;  // Pow
  std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

inline constexpr std::int64_t kDefaultExponentBound = 1000000;

/// Recursive descent over
///   expr := term (('+'|'-') term)*     term := unary (('*'|'/') unary)*
///   unary := '-' unary | factor         factor := atom ('^' ['-'] int)?
///   atom := 'T' | 'a' | int | '(' expr ')'
/// Throws SyntaxError (message carries the 0-based position) and Overflow
/// for exponents beyond `exponent_bound` in absolute value.
ExprPtr parse_expr(std::string_view text, const Field& field, std::int64_t exponent_bound = kDefaultExponentBound);

/// Throws DivisionByZero when a divisor or a negatively powered base is zero.
RatFunc eval_expr(const Expr& e, const Field& field);

/// Canonical text; eval_expr(parse_expr(print_expr(x))) == x.
std::string print_expr(const RatFunc& x);

/// Tree shape such as "add(1,mul(T,T))".
std::string describe(const Expr& e);

/// parse + eval.
RatFunc parse_value(std::string_view text, const Field& field);

/// Comma-separated values; commas inside parentheses do not split.
std::vector<RatFunc> parse_value_list(std::string_view text, const Field& field);

}  // namespace sunit
