#pragma once

#include <string>
#include <string_view>

#include "symlap/core.hpp"
#include "symlap/polynomial.hpp"

namespace symlap {

/// A transform written as g1(s) + g2(conj s). Constant terms live in g1.
struct SplitTransform {
  RationalFunction g1;
  RationalFunction g2;

  /// g1(s) + g2(s_bar). The two arguments are independent so the same
  /// expression can be sampled at s = x1 + iy, s_bar = x2 - iy.
  Complex operator()(Complex s, Complex s_bar) const {
    return evaluate_rational(g1, s) + evaluate_rational(g2, s_bar);
  }
};

/// Parses an expression in `s` and `cs` (alias `conj(s)`) for conj(s).
///
/// Grammar (whitespace-insensitive):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' integer)?
///     primary := number | 's' | 'cs' | 'conj' '(' 's' ')' | 'i' | '(' expr ')'
///
/// Every subexpression is kept as a pair (s-part, cs-part). Products and
/// quotients that would couple s with cs raise SplitError; syntax problems
/// raise ParseError. Both carry the byte offset of the offending token.
SplitTransform parse_transform(std::string_view text);

/// Text form that parse_transform reads back to the same rational functions.
std::string to_string(const SplitTransform& st);

}  // namespace symlap
