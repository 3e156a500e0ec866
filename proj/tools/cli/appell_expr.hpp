#pragma once

// A small calculator over the Appell group.
//
//   expr   := term ('+' term)*
//   term   := power ('*' power)*
//   power  := unary ('^' ['-'] int)?
//   unary  := 'inv' '(' expr ')' | 'inv' unary | '(' expr ')' | name | rational
//   name   := bernoulli | euler | genocchi | hermite | identity | I
//
// '*' between two sequences is the Appell convolution; between a rational and
// a sequence it is scalar multiplication. Rationals are written "a" or "a/b".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pqappell/appell.hpp"

namespace pqa::cli {

/// Malformed expression (usage error).
class ExprError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluates `expr` with every sequence built to `order`. Throws ExprError
/// on syntax or type errors and std::domain_error on group-law violations
/// such as inverting a degenerate sequence.
AppellSequence evaluate_appell_expr(std::string_view expr, const ContextPtr& ctx, std::size_t order);

}  // namespace pqa::cli
