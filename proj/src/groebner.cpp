#include "milnor/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace milnor {

namespace {

// Working form for reduction: descending-ordered map keyed by the packed
// monomial key, so the leading term is begin().
using WorkMap = std::map<std::uint64_t, Term, std::greater<>>;

WorkMap to_work(const Polynomial& p) {
  WorkMap work;
  for (const auto& t : p.terms()) work.emplace_hint(work.end(), t.mon.key(), t);
  return work;
}

void work_submul(WorkMap& work, const Rational& c, const Monomial& mon, const Polynomial& g,
                 bool skip_leading) {
  auto it = g.terms().begin();
  if (skip_leading) ++it;
  for (; it != g.terms().end(); ++it) {
    Monomial m = it->mon * mon;
    auto [entry, inserted] = work.try_emplace(m.key(), Term{m, Rational(0)});
    entry->second.coeff -= c * it->coeff;
    if (entry->second.coeff == 0) work.erase(entry);
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G) {
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
    if (g.nvars() != p.nvars()) {
      throw std::invalid_argument("normal_form: variable count mismatch");
    }
  }
  WorkMap work = to_work(p);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial mon = top->second.mon;
    const Polynomial* reducer = nullptr;
    for (const auto& g : G) {
      if (divides(g.leading_monomial(), mon)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(std::move(top->second));
      work.erase(top);
      continue;
    }
    Rational c = top->second.coeff / reducer->leading_coefficient();
    Monomial q = quotient(mon, reducer->leading_monomial());
    work.erase(top);
    work_submul(work, c, q, *reducer, /*skip_leading=*/true);
  }
  return Polynomial::from_terms(std::move(remainder), p.nvars());
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  return normal_form(p, std::span<const Polynomial>(G.generators));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw std::invalid_argument("s_polynomial requires nonzero inputs");
  }
  if (f.nvars() != g.nvars()) {
    throw std::invalid_argument("s_polynomial: variable count mismatch");
  }
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = multiply_by_term(f, 1 / f.leading_coefficient(),
                                  quotient(l, f.leading_monomial()));
  Polynomial b = multiply_by_term(g, 1 / g.leading_coefficient(),
                                  quotient(l, g.leading_monomial()));
  return a - b;
}

namespace {

struct Pair {
  int i, j;           // i < j, indices into the working basis
  Monomial lcm_mon;

  bool operator<(const Pair& other) const {
    if (lcm_mon.degree() != other.lcm_mon.degree()) {
      return lcm_mon.degree() < other.lcm_mon.degree();
    }
    if (lcm_mon.key() != other.lcm_mon.key()) return lcm_mon.key() < other.lcm_mon.key();
    if (i != other.i) return i < other.i;
    return j < other.j;
  }
};

class BuchbergerRun {
 public:
  explicit BuchbergerRun(const BuchbergerOptions& options) : options_(options) {}

  // Gebauer-Moeller update: prune the candidate pairs of the new element by
  // the lcm-domination and coprimality criteria, and apply the chain
  // criterion to the surviving old pairs.
  void add(const Polynomial& h_monic) {
    const int h = static_cast<int>(basis_.size());
    const Monomial& lm_h = h_monic.leading_monomial();

    struct Candidate {
      Pair pair;
      bool coprime_lms;
    };
    std::vector<Candidate> cands;
    cands.reserve(static_cast<std::size_t>(h));
    for (int g = 0; g < h; ++g) {
      const Monomial& lm_g = basis_[static_cast<std::size_t>(g)].leading_monomial();
      cands.push_back({{g, h, lcm(lm_g, lm_h)}, coprime(lm_g, lm_h)});
    }
    enum class Status : std::uint8_t { Pending, Kept, Dropped };
    std::vector<Status> status(cands.size(), Status::Pending);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      bool keep = cands[k].coprime_lms;
      if (!keep) {
        bool dominated = false;
        for (std::size_t m = 0; m < cands.size() && !dominated; ++m) {
          if (m == k) continue;
          // m counts if still unprocessed (in C) or already kept (in D).
          bool active = (m > k) || status[m] == Status::Kept;
          if (active && divides(cands[m].pair.lcm_mon, cands[k].pair.lcm_mon)) dominated = true;
        }
        keep = !dominated;
      }
      status[k] = keep ? Status::Kept : Status::Dropped;
    }

    // Chain criterion against the existing pair set.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      const Monomial& lm_i = basis_[static_cast<std::size_t>(p.i)].leading_monomial();
      const Monomial& lm_j = basis_[static_cast<std::size_t>(p.j)].leading_monomial();
      bool drop = divides(lm_h, p.lcm_mon) && !(lcm(lm_i, lm_h) == p.lcm_mon) &&
                  !(lcm(lm_h, lm_j) == p.lcm_mon);
      it = drop ? pairs_.erase(it) : std::next(it);
    }
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (status[k] == Status::Kept && !cands[k].coprime_lms) pairs_.insert(cands[k].pair);
    }
    basis_.push_back(h_monic);
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (options_.degree_cap && p.lcm_mon.degree() > *options_.degree_cap) {
        // Pairs are ordered by lcm degree, so everything left is capped too.
        pairs_.clear();
        break;
      }
      Polynomial s = s_polynomial(basis_[static_cast<std::size_t>(p.i)],
                                  basis_[static_cast<std::size_t>(p.j)]);
      Polynomial r = normal_form(s, std::span<const Polynomial>(basis_));
      if (!r.is_zero()) add(r.monic());
    }
  }

  std::vector<Polynomial>& basis() { return basis_; }

 private:
  BuchbergerOptions options_;
  std::vector<Polynomial> basis_;
  std::set<Pair> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const BuchbergerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const int nvars = gens.front().nvars();
  bool any_nonzero = false;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("buchberger: variable count mismatch");
    if (!g.is_zero()) any_nonzero = true;
  }
  if (!any_nonzero) throw std::invalid_argument("buchberger: all generators are zero");

  BuchbergerRun run(options);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(g, std::span<const Polynomial>(run.basis()));
    if (!r.is_zero()) run.add(r.monic());
  }
  run.run();

  std::vector<Polynomial>& basis = run.basis();

  // Unit ideal: collapse to {1}.
  for (const auto& g : basis) {
    if (g.is_constant()) {
      GroebnerBasis out;
      out.nvars = nvars;
      out.degree_cap = options.degree_cap;
      out.generators = {Polynomial::constant(Rational(1), nvars)};
      out.lt_generators = {Monomial::one(nvars)};
      return out;
    }
  }

  // Minimalize: every added element was fully reduced, so only earlier
  // leading monomials can be divisible by later ones.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (divides(mj, mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail interreduction.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial r = normal_form(minimal[i], std::span<const Polynomial>(others));
    reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  GroebnerBasis out;
  out.nvars = nvars;
  out.degree_cap = options.degree_cap;
  out.lt_generators.reserve(reduced.size());
  for (const auto& g : reduced) out.lt_generators.push_back(g.leading_monomial());
  out.generators = std::move(reduced);
  return out;
}

std::vector<Monomial> leading_term_generators(const GroebnerBasis& G) {
  std::vector<Monomial> lts;
  lts.reserve(G.generators.size());
  for (const auto& g : G.generators) lts.push_back(g.leading_monomial());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < lts.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lts.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lts[j], lts[i]) && !(lts[i] == lts[j] && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(lts[i]);
  }
  return minimal;
}

GroebnerBasis dehomogenized_basis(const GroebnerBasis& G, int index) {
  if (G.degree_cap) {
    throw std::invalid_argument("dehomogenized_basis requires a complete (uncapped) basis");
  }
  if (index != G.nvars - 1) {
    throw std::invalid_argument("dehomogenized_basis dehomogenizes at the last variable only");
  }
  std::vector<Polynomial> gens;
  gens.reserve(G.generators.size());
  for (const auto& g : G.generators) {
    Polynomial s = dehomogenize(g, index);
    if (!s.is_zero()) gens.push_back(s.monic());
  }
  if (gens.empty()) throw std::logic_error("dehomogenized basis is empty");

  const int nvars = G.nvars - 1;
  for (const auto& g : gens) {
    if (g.is_constant()) {
      GroebnerBasis out;
      out.nvars = nvars;
      out.generators = {Polynomial::constant(Rational(1), nvars)};
      out.lt_generators = {Monomial::one(nvars)};
      return out;
    }
  }

  // Minimalize leading terms (ties keep the earlier generator), then
  // tail-reduce for the reduced basis.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = gens[i].leading_monomial();
      const Monomial& mj = gens[j].leading_monomial();
      if (divides(mj, mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], std::span<const Polynomial>(others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  GroebnerBasis out;
  out.nvars = nvars;
  out.lt_generators.reserve(reduced.size());
  for (const auto& g : reduced) out.lt_generators.push_back(g.leading_monomial());
  out.generators = std::move(reduced);
  return out;
}

bool is_confluent(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < G.generators.size(); ++j) {
      Monomial l = lcm(G.generators[i].leading_monomial(), G.generators[j].leading_monomial());
      if (G.degree_cap && l.degree() > *G.degree_cap) continue;
      Polynomial s = s_polynomial(G.generators[i], G.generators[j]);
      if (!normal_form(s, G).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace milnor
