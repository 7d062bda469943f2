#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/monomial.hpp"
#include "milnor/rational.hpp"

namespace milnor {

// Ordered, distinct variable names. Index 0 is the most significant variable
// of the monomial order.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  // x(0), x(1), ..., x(count-1)
  static VariableSet positional(int count);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_[static_cast<std::size_t>(index)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

struct Term {
  Monomial mon;
  Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept in strictly
// descending monomial order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(const Rational& value, int nvars);
  static Polynomial variable(int index, int nvars);
  static Polynomial term(const Monomial& mon, const Rational& coeff);
  // Terms may arrive in any order with repeats; they get merged and sorted.
  static Polynomial from_terms(std::vector<Term> terms, int nvars);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mon.is_one(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading data; call only on nonzero polynomials.
  const Monomial& leading_monomial() const { return terms_.front().mon; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  // Max total degree among terms; -1 for the zero polynomial.
  int total_degree() const;

  const Rational* coefficient(const Monomial& mon) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  bool operator==(const Polynomial& other) const;

  // this -= c * mon * other; the workhorse of polynomial reduction.
  void submul(const Rational& c, const Monomial& mon, const Polynomial& other);

  Polynomial monic() const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;

  friend Polynomial multiply_by_term(const Polynomial& p, const Rational& c, const Monomial& mon);
};

Polynomial multiply_by_term(const Polynomial& p, const Rational& c, const Monomial& mon);
Polynomial poly_pow(const Polynomial& base, int exponent);

// Formal partial derivative with respect to variable `index`.
Polynomial partial_derivative(const Polynomial& f, int index);

struct DegreeInfo {
  int degree;
  bool homogeneous;
};

// Throws std::invalid_argument on the zero polynomial (degree undefined).
DegreeInfo degree_and_homogeneity(const Polynomial& f);

using QMatrix = std::vector<std::vector<Rational>>;

// f(x) -> f(M x). M must be square of size nvars and invertible.
Polynomial apply_linear_substitution(const Polynomial& f, const QMatrix& matrix);

// Sets variable `index` to 1 and re-expresses the result in the remaining
// nvars-1 variables (indices above `index` shift down). Requires f
// homogeneous.
Polynomial dehomogenize(const Polynomial& f, int index);

// Canonical text form: descending terms, explicit '*', '^' for exponents > 1.
std::string to_string(const Polynomial& f, const VariableSet& vars);

}  // namespace milnor
