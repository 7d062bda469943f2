#pragma once

#include <optional>
#include <span>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor {

// Reduced monic Groebner basis under the global degrevlex order together
// with the minimal generating set of its leading-term ideal.
struct GroebnerBasis {
  std::vector<Polynomial> generators;  // monic, inter-reduced, ascending leading monomial
  std::vector<Monomial> lt_generators;
  int nvars = 0;
  // Present when the computation was truncated: the basis is only complete
  // for leading terms of degree <= *degree_cap.
  std::optional<int> degree_cap;
};

struct BuchbergerOptions {
  // Skip critical pairs whose lcm degree exceeds the cap. Only sound for
  // homogeneous input, where it yields a basis complete up to the cap.
  std::optional<int> degree_cap;
};

// Fully reduced remainder of p modulo G (in order). No monomial of the
// result is divisible by any leading monomial of G. Unique normal form when
// G is a Groebner basis.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

// lcm(LM f, LM g)/LT f * f - lcm(LM f, LM g)/LT g * g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with normal pair selection, the coprimality
// criterion and Gebauer-Moeller chain elimination.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const BuchbergerOptions& options = {});

// Minimal generating set of the leading-term ideal (no element divides
// another).
std::vector<Monomial> leading_term_generators(const GroebnerBasis& G);

// True when every S-polynomial of basis pairs (with lcm degree within the
// cap, if any) reduces to zero against the basis.
bool is_confluent(const GroebnerBasis& G);

// Dehomogenization of a complete basis of a homogeneous ideal at the last
// variable. Because degrevlex makes the last variable least, setting it to 1
// in every generator again yields a Groebner basis, which is then
// re-reduced. Requires an uncapped basis and index == nvars-1.
GroebnerBasis dehomogenized_basis(const GroebnerBasis& G, int index);

}  // namespace milnor
