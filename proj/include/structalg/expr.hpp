#pragma once

#include <map>
#include <string>

#include "structalg/field.hpp"

namespace structalg {

using ExprEnv = std::map<std::string, GQ>;

/// Evaluates a scalar expression over Q(i) with named parameters.
///
/// Grammar: + - * / ^ (integer exponent), parentheses, integer literals,
/// the imaginary unit `i`, and identifiers bound in `env`.
/// Throws ParseError on malformed input or unbound identifiers,
/// DivisionByZero on zero denominators.
GQ eval_expr(const std::string& text, const ExprEnv& env = {});

}  // namespace structalg
