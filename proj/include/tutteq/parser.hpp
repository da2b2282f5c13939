#ifndef TUTTEQ_PARSER_HPP
#define TUTTEQ_PARSER_HPP

#include <string>
#include <vector>

#include "tutteq/bipoly.hpp"

namespace tq {

/// Parse an expression in up to two declared variables. Grammar: integer and
/// p/q rational literals, the declared variable names, `+ - * ^` with
/// nonnegative integer exponents, parentheses, unary minus; whitespace is
/// insignificant and implicit multiplication is rejected. The first declared
/// name maps to the x slot of the result, the second to y.
BiPoly parse_expr(const std::string& text, const std::vector<std::string>& variables);

/// Single-variable convenience wrappers.
PolyQ parse_poly(const std::string& text, const std::string& variable);
Rational parse_rational(const std::string& text);

/// Accepts either a plain polynomial expression or a quotient written as
/// (numerator)/(denominator) with the division at paren depth zero.
RatFun parse_ratfun(const std::string& text, const std::string& variable);

/// Printers; output re-parses to the same object. Terms are emitted in
/// descending degree (graded-lex with the second variable ranked higher for
/// bivariate input).
std::string print_poly(const PolyQ& p, const std::string& variable);
std::string print_ratfun(const RatFun& f, const std::string& variable);
std::string print_bipoly(const BiPoly& p, const std::string& xname, const std::string& yname);

} // namespace tq

#endif
