#pragma once

#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

// Tuple (a_0, ..., a_n) of homogeneous coefficient polynomials with
// sum a_i * f_i = 0.
struct SyzygyVector {
  std::vector<Polynomial> components;
};

struct SyzygySpace {
  int degree = 0;  // common degree of the coefficient polynomials
  std::vector<SyzygyVector> basis;
  int koszul_dimension = 0;
  int nontrivial_dimension = 0;
};

// All degree-m syzygies among the partial derivatives of a plane curve
// (n = 2 only), via the exact linear system over the coefficient unknowns.
// Basis vectors are normalized so the first nonzero coefficient is 1.
SyzygySpace syzygies_of_degree(const Polynomial& f, int m);

// Dimension at coefficient-degree m of the span of monomial multiples of the
// trivial relations f_j e_i - f_i e_j.
int koszul_subspace_dimension(const Polynomial& f, int m);

// Least m <= mmax with a nontrivial syzygy; throws LimitError if none.
int minimal_syzygy_degree_direct(const Polynomial& f, int mmax);

// Exact check that sum a_i * f_i vanishes identically.
bool verify_syzygy(const Polynomial& f, const SyzygyVector& v);

// True when v lies in the span of the space's basis vectors.
bool syzygy_in_span(const SyzygySpace& space, const SyzygyVector& v);

// Representatives of the degree-m syzygies modulo the Koszul subspace: the
// kernel basis vectors that enlarge the span of the trivial relations.
std::vector<SyzygyVector> nontrivial_syzygy_basis(const Polynomial& f, int m);

}  // namespace milnor
