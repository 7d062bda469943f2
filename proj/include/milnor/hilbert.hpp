#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/groebner.hpp"

namespace milnor {

// Graded dimensions of a Milnor algebra next to the smooth comparison
// series. Both sequences run over degrees 0..T+1 with T = (n+1)(d-2).
struct HilbertData {
  std::vector<long long> dims;
  std::vector<long long> smooth_dims;
  int T = 0;
  long long stable_value = 0;
};

// Number of degree-k monomials in `nvars` variables divisible by no element
// of lt_gens.
long long standard_monomial_count(const std::vector<Monomial>& lt_gens, int k, int nvars);

// standard_monomial_count for k = 0..kmax against G's leading terms.
std::vector<long long> hilbert_function(const GroebnerBasis& G, int kmax);

// Coefficients of (1 + t + ... + t^(d-2))^(n+1) for degrees 0..T, zero
// extended through T+1.
std::vector<long long> smooth_series(int n, int d);

HilbertData make_hilbert_data(std::vector<long long> dims, int n, int d);

// All standard monomials when the quotient is finite dimensional, in
// ascending order; nullopt when some variable has no pure power among the
// leading terms.
std::optional<std::vector<Monomial>> standard_monomial_basis(const GroebnerBasis& G);

// Total standard-monomial count, or nullopt for an infinite-dimensional
// quotient.
std::optional<long long> vector_space_dimension(const GroebnerBasis& G);

}  // namespace milnor
