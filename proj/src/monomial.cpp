#include "milnor/monomial.hpp"

#include <stdexcept>
#include <string>

namespace milnor {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw std::invalid_argument("variable count must be between 1 and " +
                                std::to_string(kMaxVars) + ", got " + std::to_string(nvars));
  }
}

void check_exponent(int value) {
  if (value < 0 || value > kMaxPackedExponent) {
    throw std::invalid_argument("exponent out of packable range: " + std::to_string(value));
  }
}

}  // namespace

Monomial::Monomial(int nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
  rebuild_key();
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::vector<int>(exponents)) {}

Monomial::Monomial(const std::vector<int>& exponents) {
  check_nvars(static_cast<int>(exponents.size()));
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    degree += exponents[i];
    exponents_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  check_exponent(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  rebuild_key();
}

Monomial Monomial::variable(int index, int nvars) { return pure_power(index, 1, nvars); }

Monomial Monomial::pure_power(int index, int exponent, int nvars) {
  Monomial m(nvars);
  if (index < 0 || index >= nvars) {
    throw std::invalid_argument("variable index out of range: " + std::to_string(index));
  }
  check_exponent(exponent);
  m.exponents_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint8_t>(exponent);
  m.rebuild_key();
  return m;
}

std::vector<int> Monomial::exponent_vector() const {
  std::vector<int> out(nvars_);
  for (int i = 0; i < nvars_; ++i) out[static_cast<std::size_t>(i)] = exponents_[static_cast<std::size_t>(i)];
  return out;
}

int Monomial::sole_variable() const {
  int found = -1;
  for (int i = 0; i < nvars_; ++i) {
    if (exponents_[static_cast<std::size_t>(i)] != 0) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

void Monomial::rebuild_key() {
  // Byte layout, most significant first: total degree, then complemented
  // exponents from the last variable down to the first.
  std::uint64_t key = static_cast<std::uint64_t>(degree_) << 56;
  for (int i = 0; i < nvars_; ++i) {
    int shift = 8 * (kMaxVars - nvars_ + i);
    key |= static_cast<std::uint64_t>(255 - exponents_[static_cast<std::size_t>(i)]) << shift;
  }
  key_ = key;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("cannot compare monomials with different variable counts");
  }
  return a.key() <=> b.key();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) {
    throw std::invalid_argument("cannot multiply monomials with different variable counts");
  }
  Monomial out(a.nvars_);
  int degree = a.degree_ + b.degree_;
  check_exponent(degree);
  for (int i = 0; i < a.nvars_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out.exponents_[idx] = static_cast<std::uint8_t>(a.exponents_[idx] + b.exponents_[idx]);
  }
  out.degree_ = static_cast<std::uint8_t>(degree);
  out.rebuild_key();
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) {
    throw std::invalid_argument("cannot test divisibility across variable counts");
  }
  if (a.degree_ > b.degree_) return false;
  for (int i = 0; i < a.nvars_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (a.exponents_[idx] > b.exponents_[idx]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) {
    throw std::invalid_argument("cannot take lcm across variable counts");
  }
  Monomial out(a.nvars_);
  int degree = 0;
  for (int i = 0; i < a.nvars_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out.exponents_[idx] = std::max(a.exponents_[idx], b.exponents_[idx]);
    degree += out.exponents_[idx];
  }
  check_exponent(degree);
  out.degree_ = static_cast<std::uint8_t>(degree);
  out.rebuild_key();
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) {
    throw std::invalid_argument("monomial quotient requires exact divisibility");
  }
  Monomial out(a.nvars_);
  for (int i = 0; i < a.nvars_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    out.exponents_[idx] = static_cast<std::uint8_t>(a.exponents_[idx] - b.exponents_[idx]);
  }
  out.degree_ = static_cast<std::uint8_t>(a.degree_ - b.degree_);
  out.rebuild_key();
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) {
    throw std::invalid_argument("cannot test coprimality across variable counts");
  }
  for (int i = 0; i < a.nvars_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (a.exponents_[idx] != 0 && b.exponents_[idx] != 0) return false;
  }
  return true;
}

}  // namespace milnor
