#pragma once

#include <string_view>

#include "milnor/errors.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

struct ParseOptions {
  // Fail fast on runaway exponents; degrees in scope stay in single digits.
  int max_exponent = 64;
};

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := ['-'] factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | var | '(' expr ')'
//   rational := nat ('/' nat)?
// Multiplication is always explicit. Variable names may be alphabetic
// identifiers or positional names of the form x(3).
Polynomial parse_polynomial(std::string_view src, const VariableSet& vars,
                            const ParseOptions& options = {});

}  // namespace milnor
