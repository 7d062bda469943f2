#include "milnor/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "milnor/linalg.hpp"

namespace milnor {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxVars) {
    throw std::invalid_argument("variable set must have between 1 and " +
                                std::to_string(kMaxVars) + " names");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("variable names must be nonempty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

VariableSet VariableSet::positional(int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) names.push_back("x(" + std::to_string(i) + ")");
  return VariableSet(std::move(names));
}

std::optional<int> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomial variable counts differ: " +
                                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
  }
}

}  // namespace

Polynomial Polynomial::constant(const Rational& value, int nvars) {
  Polynomial p(nvars);
  if (value != 0) p.terms_.push_back({Monomial::one(nvars), value});
  return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(index, nvars), Rational(1)});
  return p;
}

Polynomial Polynomial::term(const Monomial& mon, const Rational& coeff) {
  Polynomial p(mon.nvars());
  if (coeff != 0) p.terms_.push_back({mon, coeff});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, int nvars) {
  std::map<std::uint64_t, Term, std::greater<>> acc;
  for (auto& t : terms) {
    if (t.mon.nvars() != nvars) {
      throw std::invalid_argument("term variable count differs from polynomial");
    }
    auto [it, inserted] = acc.try_emplace(t.mon.key(), t);
    if (!inserted) it->second.coeff += t.coeff;
  }
  Polynomial p(nvars);
  p.terms_.reserve(acc.size());
  for (auto& [key, t] : acc) {
    if (t.coeff != 0) p.terms_.push_back(std::move(t));
  }
  return p;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, t.mon.degree());
  return deg;
}

const Rational* Polynomial::coefficient(const Monomial& mon) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mon.key(),
                             [](const Term& t, std::uint64_t key) { return t.mon.key() > key; });
  if (it != terms_.end() && it->mon.key() == mon.key()) return &it->coeff;
  return nullptr;
}

namespace {

// Merge b into a with b scaled by `scale` (monomials already aligned).
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const std::uint64_t ka = a[i].mon.key(), kb = b[j].mon.key();
    if (ka > kb) {
      out.push_back(a[i++]);
    } else if (ka < kb) {
      out.push_back({b[j].mon, scale * b[j].coeff});
      ++j;
    } else {
      Rational c = a[i].coeff + scale * b[j].coeff;
      if (c != 0) out.push_back({a[i].mon, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mon, scale * b[j].coeff});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_nvars(*this, other);
  terms_ = merge_terms(terms_, other.terms_, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_nvars(*this, other);
  terms_ = merge_terms(terms_, other.terms_, Rational(-1));
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out -= b;
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars());
  if (c == 0) return out;
  out.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) out.terms_.push_back({t.mon, c * t.coeff});
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_nvars(a, b);
  std::map<std::uint64_t, Term, std::greater<>> acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      Monomial m = ta.mon * tb.mon;
      auto [it, inserted] = acc.try_emplace(m.key(), Term{m, ta.coeff * tb.coeff});
      if (!inserted) it->second.coeff += ta.coeff * tb.coeff;
    }
  }
  Polynomial out(a.nvars());
  out.terms_.reserve(acc.size());
  for (auto& [key, t] : acc) {
    if (t.coeff != 0) out.terms_.push_back(std::move(t));
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mon == other.terms_[i].mon) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

void Polynomial::submul(const Rational& c, const Monomial& mon, const Polynomial& other) {
  check_same_nvars(*this, other);
  std::vector<Term> scaled;
  scaled.reserve(other.terms_.size());
  for (const auto& t : other.terms_) scaled.push_back({t.mon * mon, -c * t.coeff});
  terms_ = merge_terms(terms_, scaled, Rational(1));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return inv * *this;
}

Polynomial multiply_by_term(const Polynomial& p, const Rational& c, const Monomial& mon) {
  Polynomial out(p.nvars());
  if (c == 0) return out;
  out.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) out.terms_.push_back({t.mon * mon, c * t.coeff});
  return out;
}

Polynomial poly_pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Polynomial result = Polynomial::constant(Rational(1), base.nvars());
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

Polynomial partial_derivative(const Polynomial& f, int index) {
  if (index < 0 || index >= f.nvars()) {
    throw std::invalid_argument("derivative index out of range: " + std::to_string(index));
  }
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    int e = t.mon.exponent(index);
    if (e == 0) continue;
    std::vector<int> exps = t.mon.exponent_vector();
    exps[static_cast<std::size_t>(index)] = e - 1;
    terms.push_back({Monomial(exps), Rational(e) * t.coeff});
  }
  return Polynomial::from_terms(std::move(terms), f.nvars());
}

DegreeInfo degree_and_homogeneity(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
  int maxdeg = -1, mindeg = kMaxPackedExponent + 1;
  for (const auto& t : f.terms()) {
    maxdeg = std::max(maxdeg, t.mon.degree());
    mindeg = std::min(mindeg, t.mon.degree());
  }
  return {maxdeg, maxdeg == mindeg};
}

Polynomial apply_linear_substitution(const Polynomial& f, const QMatrix& matrix) {
  const int n = f.nvars();
  if (static_cast<int>(matrix.size()) != n) {
    throw std::invalid_argument("substitution matrix size differs from variable count");
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("substitution matrix is not square");
    }
  }
  if (!matrix_is_invertible(matrix)) {
    throw std::invalid_argument("substitution matrix is singular");
  }

  // Images of the variables, then per-variable power caches.
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Term> row;
    for (int j = 0; j < n; ++j) {
      const Rational& c = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != 0) row.push_back({Monomial::variable(j, n), c});
    }
    images.push_back(Polynomial::from_terms(std::move(row), n));
  }
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    powers[static_cast<std::size_t>(i)].push_back(Polynomial::constant(Rational(1), n));
  }
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
    }
    return cache[static_cast<std::size_t>(e)];
  };

  Polynomial out(n);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(t.coeff, n);
    for (int i = 0; i < n; ++i) {
      int e = t.mon.exponent(i);
      if (e > 0) prod = prod * power(i, e);
    }
    out += prod;
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& f, int index) {
  if (index < 0 || index >= f.nvars()) {
    throw std::invalid_argument("dehomogenization index out of range");
  }
  if (!degree_and_homogeneity(f).homogeneous) {
    throw std::invalid_argument("dehomogenize requires a homogeneous polynomial");
  }
  const int n = f.nvars() - 1;
  if (n < 1) throw std::invalid_argument("cannot dehomogenize a univariate polynomial");
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < f.nvars(); ++i) {
      if (i != index) exps.push_back(t.mon.exponent(i));
    }
    terms.push_back({Monomial(exps), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms), n);
}

std::string to_string(const Polynomial& f, const VariableSet& vars) {
  if (vars.size() != f.nvars()) {
    throw std::invalid_argument("variable set size differs from polynomial");
  }
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    }
    first = false;

    bool printed_coeff = false;
    if (c != 1 || t.mon.is_one()) {
      out << to_string(c);
      printed_coeff = true;
    }
    bool first_var = true;
    for (int i = 0; i < f.nvars(); ++i) {
      int e = t.mon.exponent(i);
      if (e == 0) continue;
      if (printed_coeff || !first_var) out << "*";
      first_var = false;
      out << vars.name(i);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace milnor
