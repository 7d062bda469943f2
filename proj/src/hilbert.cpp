#include "milnor/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace milnor {

namespace {

// Depth-first exponent assignment. At each node, prune the whole branch if
// some generator already divides every completion (all its remaining
// exponents are zero and the assigned prefix dominates it).
struct StandardMonomialWalker {
  const std::vector<Monomial>& gens;
  int nvars;
  std::vector<int> exps;
  long long count = 0;
  std::vector<Monomial>* collect = nullptr;

  bool gen_kills_branch(const Monomial& g, int next_var) const {
    for (int i = 0; i < next_var; ++i) {
      if (g.exponent(i) > exps[static_cast<std::size_t>(i)]) return false;
    }
    for (int i = next_var; i < nvars; ++i) {
      if (g.exponent(i) > 0) return false;
    }
    return true;
  }

  void walk(int var, int remaining) {
    for (const auto& g : gens) {
      if (gen_kills_branch(g, var)) return;
    }
    if (var == nvars - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      bool divisible = false;
      for (const auto& g : gens) {
        bool d = true;
        for (int i = 0; i < nvars && d; ++i) {
          if (g.exponent(i) > exps[static_cast<std::size_t>(i)]) d = false;
        }
        if (d) {
          divisible = true;
          break;
        }
      }
      if (!divisible) {
        ++count;
        if (collect) collect->push_back(Monomial(exps));
      }
      exps[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      walk(var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  }
};

}  // namespace

long long standard_monomial_count(const std::vector<Monomial>& lt_gens, int k, int nvars) {
  if (k < 0) throw std::invalid_argument("standard_monomial_count: negative degree");
  for (const auto& g : lt_gens) {
    if (g.nvars() != nvars) {
      throw std::invalid_argument("standard_monomial_count: variable count mismatch");
    }
    if (g.is_one()) return 0;  // unit ideal
  }
  if (nvars == 1) {
    for (const auto& g : lt_gens) {
      if (g.exponent(0) <= k) return 0;
    }
    return 1;
  }
  StandardMonomialWalker walker{lt_gens, nvars, std::vector<int>(static_cast<std::size_t>(nvars), 0)};
  walker.walk(0, k);
  return walker.count;
}

std::vector<long long> hilbert_function(const GroebnerBasis& G, int kmax) {
  if (kmax < 0) throw std::invalid_argument("hilbert_function: negative degree bound");
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    out.push_back(standard_monomial_count(G.lt_generators, k, G.nvars));
  }
  return out;
}

std::vector<long long> smooth_series(int n, int d) {
  if (n < 1 || d < 2) {
    throw std::invalid_argument("smooth_series requires n >= 1 and d >= 2");
  }
  const int T = (n + 1) * (d - 2);
  std::vector<long long> coeffs{1};
  const std::size_t block = static_cast<std::size_t>(d - 1);  // 1 + t + ... + t^(d-2)
  for (int rep = 0; rep < n + 1; ++rep) {
    std::vector<long long> next(coeffs.size() + block - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::size_t j = 0; j < block; ++j) next[i + j] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  coeffs.resize(static_cast<std::size_t>(T) + 2, 0);
  return coeffs;
}

HilbertData make_hilbert_data(std::vector<long long> dims, int n, int d) {
  const int T = (n + 1) * (d - 2);
  if (static_cast<int>(dims.size()) != T + 2) {
    throw std::invalid_argument("make_hilbert_data: dims must cover degrees 0..T+1");
  }
  HilbertData data;
  data.T = T;
  data.stable_value = dims.back();
  data.dims = std::move(dims);
  data.smooth_dims = smooth_series(n, d);
  return data;
}

std::optional<std::vector<Monomial>> standard_monomial_basis(const GroebnerBasis& G) {
  const int nvars = G.nvars;
  // Finiteness: every variable needs a pure power among the leading terms.
  std::vector<int> bound(static_cast<std::size_t>(nvars), -1);
  for (const auto& g : G.lt_generators) {
    if (g.is_one()) return std::vector<Monomial>{};  // unit ideal: zero ring
    int v = g.sole_variable();
    if (v >= 0) {
      int e = g.exponent(v);
      if (bound[static_cast<std::size_t>(v)] < 0 || e < bound[static_cast<std::size_t>(v)]) {
        bound[static_cast<std::size_t>(v)] = e;
      }
    }
  }
  for (int v = 0; v < nvars; ++v) {
    if (bound[static_cast<std::size_t>(v)] < 0) return std::nullopt;
  }

  int max_degree = 0;
  for (int v = 0; v < nvars; ++v) max_degree += bound[static_cast<std::size_t>(v)] - 1;

  std::vector<Monomial> basis;
  StandardMonomialWalker walker{G.lt_generators, nvars,
                                std::vector<int>(static_cast<std::size_t>(nvars), 0)};
  walker.collect = &basis;
  for (int k = 0; k <= max_degree; ++k) {
    walker.count = 0;
    walker.walk(0, k);
  }
  return basis;
}

std::optional<long long> vector_space_dimension(const GroebnerBasis& G) {
  auto basis = standard_monomial_basis(G);
  if (!basis) return std::nullopt;
  return static_cast<long long>(basis->size());
}

}  // namespace milnor
