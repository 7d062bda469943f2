#pragma once

#include <vector>

#include "milnor/polynomial.hpp"
#include "milnor/rational.hpp"

namespace milnor {

// Dense univariate polynomial over Q: coeffs[i] is the coefficient of x^i,
// no trailing zeros, empty vector == 0.
using Upoly = std::vector<Rational>;

int up_degree(const Upoly& p);  // -1 for zero
Upoly up_trim(Upoly p);
Upoly up_derivative(const Upoly& p);
Upoly up_monic(const Upoly& p);
Upoly up_mul(const Upoly& a, const Upoly& b);
Upoly up_sub(const Upoly& a, const Upoly& b);

// Quotient and remainder with b != 0.
struct UpolyDivision {
  Upoly quotient;
  Upoly remainder;
};
UpolyDivision up_divrem(const Upoly& a, const Upoly& b);

// Monic gcd computed with a primitive pseudo-remainder sequence over Z to
// keep intermediate coefficients tame.
Upoly up_gcd(const Upoly& a, const Upoly& b);

// m / gcd(m, m'), monic: the same roots, all simple.
Upoly up_squarefree_part(const Upoly& m);

// Embed as a polynomial in variable `index` of an nvars-variable ring.
Polynomial up_to_polynomial(const Upoly& p, int index, int nvars);

}  // namespace milnor
