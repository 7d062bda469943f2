#include "milnor/upoly.hpp"

#include <stdexcept>

namespace milnor {

int up_degree(const Upoly& p) { return static_cast<int>(p.size()) - 1; }

Upoly up_trim(Upoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Upoly up_derivative(const Upoly& p) {
  Upoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * p[i]);
  return up_trim(std::move(out));
}

Upoly up_monic(const Upoly& p) {
  if (p.empty()) return p;
  Upoly out = p;
  Rational inv = 1 / p.back();
  for (auto& c : out) c *= inv;
  return out;
}

Upoly up_mul(const Upoly& a, const Upoly& b) {
  if (a.empty() || b.empty()) return {};
  Upoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return up_trim(std::move(out));
}

Upoly up_sub(const Upoly& a, const Upoly& b) {
  Upoly out = a;
  if (b.size() > out.size()) out.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return up_trim(std::move(out));
}

UpolyDivision up_divrem(const Upoly& a, const Upoly& b) {
  if (b.empty()) throw std::invalid_argument("univariate division by zero");
  Upoly rem = a;
  Upoly quo(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (rem.size() >= b.size()) {
    Rational c = rem.back() * lead_inv;
    std::size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem = up_trim(std::move(rem));  // the top term cancels exactly
  }
  return {up_trim(std::move(quo)), std::move(rem)};
}

namespace {

// Integer content-free image of a rational polynomial.
std::vector<Integer> primitive_int(const Upoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p) {
    Integer den = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(p.size());
  Integer content = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0) {
    for (auto& v : out) v /= content;
  }
  return out;
}

std::vector<Integer> int_trim(std::vector<Integer> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Integer> remove_content(std::vector<Integer> p) {
  Integer content = 0;
  for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1) {
    for (auto& v : p) v /= content;
  }
  return p;
}

// prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b over Z.
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
  const Integer lead = b.back();
  while (a.size() >= b.size()) {
    Integer c = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = int_trim(std::move(a));
  }
  return a;
}

}  // namespace

Upoly up_gcd(const Upoly& a, const Upoly& b) {
  if (a.empty()) return up_monic(b);
  if (b.empty()) return up_monic(a);
  std::vector<Integer> u = primitive_int(a);
  std::vector<Integer> v = primitive_int(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Integer> r = remove_content(pseudo_rem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  Upoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(Rational(c));
  return up_monic(out);
}

Upoly up_squarefree_part(const Upoly& m) {
  if (m.empty()) throw std::invalid_argument("squarefree part of zero is undefined");
  if (up_degree(m) == 0) return {Rational(1)};
  Upoly g = up_gcd(m, up_derivative(m));
  auto [quotient, remainder] = up_divrem(m, g);
  if (!remainder.empty()) {
    throw std::logic_error("squarefree_part: gcd does not divide its input");
  }
  return up_monic(quotient);
}

Polynomial up_to_polynomial(const Upoly& p, int index, int nvars) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    terms.push_back({Monomial::pure_power(index, static_cast<int>(i), nvars), p[i]});
  }
  return Polynomial::from_terms(std::move(terms), nvars);
}

}  // namespace milnor
