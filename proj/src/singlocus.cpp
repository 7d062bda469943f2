#include "milnor/singlocus.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "milnor/errors.hpp"
#include "milnor/hilbert.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

std::vector<Polynomial> affine_jacobian_ideal(const Polynomial& f, const ChartTransform& chart) {
  auto info = degree_and_homogeneity(f);
  if (!info.homogeneous || info.degree < 2) {
    throw std::invalid_argument("affine_jacobian_ideal requires a homogeneous f of degree >= 2");
  }
  Polynomial g = chart.identity ? f : apply_linear_substitution(f, chart.matrix);
  std::vector<Polynomial> ideal;
  ideal.reserve(static_cast<std::size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i) {
    Polynomial d = partial_derivative(g, i);
    if (d.is_zero()) continue;
    ideal.push_back(dehomogenize(d, chart.dehom_index));
  }
  if (ideal.empty()) {
    throw std::invalid_argument("affine_jacobian_ideal: all partial derivatives vanish");
  }
  return ideal;
}

namespace {

QMatrix identity_matrix(int n) {
  QMatrix m(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// Unimodular upper-triangular integer shear composed with a coordinate
// permutation. Both factors come from the engine, so a chart is a pure
// function of the seed and the attempt number.
QMatrix random_chart_matrix(int n, std::mt19937_64& engine) {
  auto draw = [&](int modulus) { return static_cast<int>(engine() % static_cast<std::uint64_t>(modulus)); };
  QMatrix shear = identity_matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      shear[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = draw(7) - 3;
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                            perm[static_cast<std::size_t>(draw(i + 1))]);
  // matrix = shear * permutation
  QMatrix m(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
          shear[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

}  // namespace

std::pair<ChartTransform, GroebnerBasis> select_valid_chart(const Polynomial& f, long long tau,
                                                            std::uint64_t seed, int max_retries) {
  if (tau < 1) throw std::invalid_argument("select_valid_chart: tau must be >= 1 (singular input)");
  if (max_retries < 1) throw std::invalid_argument("select_valid_chart: max_retries must be >= 1");

  const int n = f.nvars();
  std::mt19937_64 engine(seed);
  std::vector<std::string> attempts;

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    ChartTransform chart;
    chart.seed = seed;
    chart.dehom_index = n - 1;
    if (attempt == 0) {
      chart.identity = true;
      chart.matrix = identity_matrix(n);
    } else {
      chart.identity = false;
      chart.matrix = random_chart_matrix(n, engine);
    }
    // The affine basis comes from the homogeneous basis of the transformed
    // Jacobian ideal: degrevlex keeps the dehomogenization variable least,
    // so setting it to 1 preserves the Groebner property, and the
    // homogeneous run is far better behaved than an inhomogeneous one.
    Polynomial g = chart.identity ? f : apply_linear_substitution(f, chart.matrix);
    std::vector<Polynomial> jacobian;
    for (int i = 0; i < n; ++i) {
      Polynomial p = partial_derivative(g, i);
      if (!p.is_zero()) jacobian.push_back(std::move(p));
    }
    GroebnerBasis G = dehomogenized_basis(buchberger(jacobian), n - 1);
    auto dim = vector_space_dimension(G);
    if (dim && *dim == tau) return {std::move(chart), std::move(G)};
    attempts.push_back(dim ? std::to_string(*dim) : "infinite");
  }

  std::ostringstream msg;
  msg << "no valid affine chart after " << max_retries << " attempts (affine dimensions:";
  for (const auto& a : attempts) msg << " " << a;
  msg << "); expected tau = " << tau
      << " - the singular locus may be non-isolated or the charts pathological";
  throw LimitError(msg.str());
}

Upoly minimal_polynomial(const GroebnerBasis& G, int index) {
  if (index < 0 || index >= G.nvars) {
    throw std::invalid_argument("minimal_polynomial: variable index out of range");
  }
  auto basis_opt = standard_monomial_basis(G);
  if (!basis_opt) {
    throw std::invalid_argument("minimal_polynomial requires a finite-dimensional quotient");
  }
  const std::vector<Monomial>& basis = *basis_opt;
  const int dim = static_cast<int>(basis.size());
  if (dim == 0) return {Rational(1)};  // zero ring: minimal polynomial is 1

  std::vector<std::pair<std::uint64_t, std::size_t>> key_index;
  key_index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) key_index.emplace_back(basis[i].key(), i);
  std::sort(key_index.begin(), key_index.end());
  auto coords = [&](const Polynomial& p) {
    QVector v(basis.size(), Rational(0));
    for (const auto& t : p.terms()) {
      auto it = std::lower_bound(key_index.begin(), key_index.end(),
                                 std::make_pair(t.mon.key(), std::size_t{0}));
      if (it == key_index.end() || it->first != t.mon.key()) {
        throw std::logic_error("normal form outside the standard monomial basis");
      }
      v[it->second] = t.coeff;
    }
    return v;
  };

  IncrementalSpan span(dim);
  Polynomial power = Polynomial::constant(Rational(1), G.nvars);  // NF of x^k, maintained reduced
  Polynomial x = Polynomial::variable(index, G.nvars);
  for (int k = 0; k <= dim; ++k) {
    if (k > 0) power = normal_form(power * x, G);
    auto dependence = span.add(coords(power));
    if (dependence) {
      Upoly m(static_cast<std::size_t>(k) + 1, Rational(0));
      m[static_cast<std::size_t>(k)] = 1;
      for (std::size_t i = 0; i < dependence->size(); ++i) m[i] = -(*dependence)[i];
      return up_trim(std::move(m));
    }
  }
  throw std::logic_error("minimal_polynomial: no dependence within quotient dimension");
}

GroebnerBasis zero_dimensional_radical(const GroebnerBasis& G) {
  auto dim = vector_space_dimension(G);
  if (!dim) {
    throw std::invalid_argument("zero_dimensional_radical requires a finite-dimensional quotient");
  }
  GroebnerBasis current = G;
  long long current_dim = *dim;
  while (true) {
    std::vector<Polynomial> adjoined;
    for (int i = 0; i < current.nvars; ++i) {
      Upoly m = minimal_polynomial(current, i);
      Upoly s = up_squarefree_part(m);
      if (up_degree(s) < up_degree(m)) {
        adjoined.push_back(up_to_polynomial(s, i, current.nvars));
      }
    }
    if (adjoined.empty()) return current;
    std::vector<Polynomial> gens = current.generators;
    gens.insert(gens.end(), adjoined.begin(), adjoined.end());
    GroebnerBasis next = buchberger(gens);
    auto next_dim = vector_space_dimension(next);
    if (!next_dim) throw std::logic_error("radical lost zero-dimensionality");
    if (*next_dim == current_dim) return next;
    current = std::move(next);
    current_dim = *next_dim;
  }
}

SingularLocusSummary singularity_census(const Polynomial& f, long long tau, std::uint64_t seed,
                                        int max_retries) {
  auto [chart, G] = select_valid_chart(f, tau, seed, max_retries);
  GroebnerBasis radical = zero_dimensional_radical(G);
  auto points = vector_space_dimension(radical);
  if (!points) throw std::logic_error("radical quotient is not finite-dimensional");
  SingularLocusSummary summary;
  summary.tau_affine = tau;
  summary.num_points = *points;
  summary.nodal = (*points == tau);
  summary.chart = std::move(chart);
  return summary;
}

}  // namespace milnor
