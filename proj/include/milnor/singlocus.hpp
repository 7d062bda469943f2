#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "milnor/groebner.hpp"
#include "milnor/upoly.hpp"

namespace milnor {

// Affine chart used to trap all singular points: substitute x -> matrix * x,
// then set variable dehom_index to 1.
struct ChartTransform {
  QMatrix matrix;
  int dehom_index = 0;
  std::uint64_t seed = 0;
  bool identity = true;
};

struct SingularLocusSummary {
  long long tau_affine = 0;
  long long num_points = 0;
  bool nodal = false;
  ChartTransform chart;
};

// The n+1 partial derivatives of f composed with the chart matrix,
// dehomogenized at chart.dehom_index: an ideal in n variables.
std::vector<Polynomial> affine_jacobian_ideal(const Polynomial& f, const ChartTransform& chart);

// Finds a chart whose affine Jacobian quotient has vector-space dimension
// exactly tau. Tries the identity chart first, then seeded random unimodular
// upper-triangular shears composed with coordinate permutations. Throws
// LimitError after max_retries attempts, listing the dimensions seen.
std::pair<ChartTransform, GroebnerBasis> select_valid_chart(const Polynomial& f, long long tau,
                                                            std::uint64_t seed, int max_retries);

// Monic least-degree m with m(x_index) in the ideal of G, found as the first
// linear dependence among normal forms of 1, x, x^2, ... over the standard
// monomial basis. Requires a finite quotient.
Upoly minimal_polynomial(const GroebnerBasis& G, int index);

// Groebner basis of the radical of a zero-dimensional ideal: adjoin the
// squarefree parts of the per-variable minimal polynomials, recompute, and
// repeat until stable.
GroebnerBasis zero_dimensional_radical(const GroebnerBasis& G);

// Full chart analysis: tau cross-check, distinct-point count, nodality.
SingularLocusSummary singularity_census(const Polynomial& f, long long tau, std::uint64_t seed,
                                        int max_retries = 8);

}  // namespace milnor
