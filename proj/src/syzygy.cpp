#include "milnor/syzygy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

void collect_monomials(int var, int remaining, std::vector<int>& exps,
                       std::vector<Monomial>& out) {
  if (var == static_cast<int>(exps.size()) - 1) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.push_back(Monomial(exps));
    exps[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    exps[static_cast<std::size_t>(var)] = e;
    collect_monomials(var + 1, remaining - e, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

// All degree-m monomials in ascending order.
std::vector<Monomial> monomials_of_degree(int m, int nvars) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  collect_monomials(0, m, exps, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.key() < b.key(); });
  return out;
}

struct SyzygyProblem {
  std::vector<Polynomial> partials;
  std::vector<Monomial> unknown_monomials;            // degree m
  std::map<std::uint64_t, std::size_t> equation_row;  // degree m+d-1 monomial -> row
  int nvars = 3;
  int d = 0;

  std::size_t unknowns() const { return partials.size() * unknown_monomials.size(); }
};

SyzygyProblem make_problem(const Polynomial& f, int m) {
  if (f.nvars() != 3) {
    throw std::invalid_argument("syzygy computations are implemented for plane curves only");
  }
  if (m < 0) throw std::invalid_argument("syzygy degree must be non-negative");
  auto info = degree_and_homogeneity(f);
  if (!info.homogeneous) throw std::invalid_argument("syzygies require a homogeneous curve");

  SyzygyProblem problem;
  problem.d = info.degree;
  for (int i = 0; i < 3; ++i) problem.partials.push_back(partial_derivative(f, i));
  problem.unknown_monomials = monomials_of_degree(m, 3);
  auto rows = monomials_of_degree(m + info.degree - 1, 3);
  for (std::size_t r = 0; r < rows.size(); ++r) problem.equation_row[rows[r].key()] = r;
  return problem;
}

// Column of the equation matrix for unknown (component i, monomial mu):
// coefficients of mu * f_i.
QVector equation_column(const SyzygyProblem& problem, int component, const Monomial& mu) {
  QVector col(problem.equation_row.size(), Rational(0));
  const Polynomial& fi = problem.partials[static_cast<std::size_t>(component)];
  for (const auto& t : fi.terms()) {
    Monomial m = t.mon * mu;
    col[problem.equation_row.at(m.key())] = t.coeff;
  }
  return col;
}

QVector flatten(const SyzygyProblem& problem, const SyzygyVector& v) {
  QVector out(problem.unknowns(), Rational(0));
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    const Polynomial& p = v.components[i];
    if (p.is_zero()) continue;
    for (const auto& t : p.terms()) {
      auto it = std::lower_bound(
          problem.unknown_monomials.begin(), problem.unknown_monomials.end(), t.mon,
          [](const Monomial& a, const Monomial& b) { return a.key() < b.key(); });
      if (it == problem.unknown_monomials.end() || !(*it == t.mon)) {
        throw std::invalid_argument("syzygy component has the wrong degree");
      }
      std::size_t offset = static_cast<std::size_t>(it - problem.unknown_monomials.begin());
      out[i * problem.unknown_monomials.size() + offset] = t.coeff;
    }
  }
  return out;
}

std::vector<QVector> koszul_vectors(const SyzygyProblem& problem, int m) {
  std::vector<QVector> vectors;
  const int mu_degree = m - (problem.d - 1);
  if (mu_degree < 0) return vectors;
  auto mus = monomials_of_degree(mu_degree, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (const auto& mu : mus) {
        SyzygyVector v;
        v.components.assign(3, Polynomial::zero(3));
        v.components[static_cast<std::size_t>(i)] =
            multiply_by_term(problem.partials[static_cast<std::size_t>(j)], Rational(1), mu);
        v.components[static_cast<std::size_t>(j)] =
            multiply_by_term(problem.partials[static_cast<std::size_t>(i)], Rational(-1), mu);
        vectors.push_back(flatten(problem, v));
      }
    }
  }
  return vectors;
}

}  // namespace

SyzygySpace syzygies_of_degree(const Polynomial& f, int m) {
  SyzygyProblem problem = make_problem(f, m);

  QMatrix system(problem.equation_row.size());
  // Build row-wise from columns to keep kernel_basis's column order equal to
  // the unknown order.
  std::vector<QVector> columns;
  columns.reserve(problem.unknowns());
  for (int i = 0; i < 3; ++i) {
    for (const auto& mu : problem.unknown_monomials) {
      columns.push_back(equation_column(problem, i, mu));
    }
  }
  for (auto& row : system) row.assign(problem.unknowns(), Rational(0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < columns[c].size(); ++r) system[r][c] = columns[c][r];
  }

  std::vector<QVector> kernel = kernel_basis(system, static_cast<int>(problem.unknowns()));

  SyzygySpace space;
  space.degree = m;
  for (const auto& vec : kernel) {
    SyzygyVector v;
    for (int i = 0; i < 3; ++i) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < problem.unknown_monomials.size(); ++k) {
        const Rational& c = vec[static_cast<std::size_t>(i) * problem.unknown_monomials.size() + k];
        if (c != 0) terms.push_back({problem.unknown_monomials[k], c});
      }
      v.components.push_back(Polynomial::from_terms(std::move(terms), 3));
    }
    space.basis.push_back(std::move(v));
  }

  QMatrix koszul = koszul_vectors(problem, m);
  space.koszul_dimension = koszul.empty() ? 0 : rank(koszul);
  space.nontrivial_dimension = static_cast<int>(space.basis.size()) - space.koszul_dimension;
  return space;
}

int koszul_subspace_dimension(const Polynomial& f, int m) {
  SyzygyProblem problem = make_problem(f, m);
  QMatrix koszul = koszul_vectors(problem, m);
  return koszul.empty() ? 0 : rank(koszul);
}

int minimal_syzygy_degree_direct(const Polynomial& f, int mmax) {
  if (mmax < 0) throw std::invalid_argument("mmax must be non-negative");
  for (int m = 0; m <= mmax; ++m) {
    if (syzygies_of_degree(f, m).nontrivial_dimension > 0) return m;
  }
  throw LimitError("no nontrivial syzygy up to degree " + std::to_string(mmax));
}

bool verify_syzygy(const Polynomial& f, const SyzygyVector& v) {
  if (static_cast<int>(v.components.size()) != f.nvars()) {
    throw std::invalid_argument("syzygy component count must match the variable count");
  }
  Polynomial sum(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    sum += v.components[static_cast<std::size_t>(i)] * partial_derivative(f, i);
  }
  return sum.is_zero();
}

std::vector<SyzygyVector> nontrivial_syzygy_basis(const Polynomial& f, int m) {
  SyzygyProblem problem = make_problem(f, m);
  SyzygySpace space = syzygies_of_degree(f, m);
  IncrementalSpan span(static_cast<int>(problem.unknowns()));
  for (const auto& k : koszul_vectors(problem, m)) span.add(k);
  std::vector<SyzygyVector> out;
  for (const auto& v : space.basis) {
    if (!span.add(flatten(problem, v))) out.push_back(v);
  }
  return out;
}

bool syzygy_in_span(const SyzygySpace& space, const SyzygyVector& v) {
  if (space.basis.empty()) return false;
  // Recover the unknown layout from the basis itself.
  int m = space.degree;
  int nvars = 3;
  auto monoms = monomials_of_degree(m, nvars);
  auto flatten_local = [&](const SyzygyVector& sv) {
    QVector out(static_cast<std::size_t>(nvars) * monoms.size(), Rational(0));
    for (std::size_t i = 0; i < sv.components.size(); ++i) {
      for (const auto& t : sv.components[i].terms()) {
        auto it = std::lower_bound(monoms.begin(), monoms.end(), t.mon,
                                   [](const Monomial& a, const Monomial& b) {
                                     return a.key() < b.key();
                                   });
        if (it == monoms.end() || !(*it == t.mon)) {
          throw std::invalid_argument("syzygy component has the wrong degree");
        }
        out[i * monoms.size() + static_cast<std::size_t>(it - monoms.begin())] = t.coeff;
      }
    }
    return out;
  };
  IncrementalSpan span(static_cast<int>(static_cast<std::size_t>(nvars) * monoms.size()));
  for (const auto& b : space.basis) span.add(flatten_local(b));
  return span.contains(flatten_local(v));
}

}  // namespace milnor
