#ifndef GRASSMANN_EXPRESSION_HPP
#define GRASSMANN_EXPRESSION_HPP

#include <string_view>

#include "grassmann/element.hpp"

namespace grassmann {

/// Evaluates products and sums of elements for the command line:
///
///   expr    := ['+'|'-'] product (('+'|'-') product)*
///   product := factor ('*' factor)*
///   factor  := '(' expr ')' | coeff | monomial
///
/// Coefficients and monomials use the element grammar's lexical forms, so any
/// printed element is also a valid expression. Throws ParseError.
Element evaluate_expression(std::string_view text, int n, Field field = Field::rational());

}  // namespace grassmann

#endif  // GRASSMANN_EXPRESSION_HPP
