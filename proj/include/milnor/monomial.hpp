#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace milnor {

// Hard cap on the ambient variable count. Seven variables keep the whole
// exponent vector plus the total degree inside one 64-bit comparison key.
inline constexpr int kMaxVars = 7;
inline constexpr int kMaxPackedExponent = 255;

// Monomial with a fixed ambient variable count. The packed key encodes
// (degree, 255-e_last, ..., 255-e_first) so that plain integer comparison of
// keys is exactly degree-reverse-lexicographic order with variable 0 most
// significant.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int index, int nvars);
  static Monomial pure_power(int index, int exponent, int nvars);

  int nvars() const { return nvars_; }
  int exponent(int index) const { return exponents_[static_cast<std::size_t>(index)]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::uint64_t key() const { return key_; }
  std::vector<int> exponent_vector() const;

  // nullopt-free contract: index of the unique variable with nonzero
  // exponent, or -1 when the monomial involves zero or several variables.
  int sole_variable() const;

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && key_ == other.key_;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

 private:
  void set_exponent_unchecked(int index, int value) {
    exponents_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(value);
  }
  void rebuild_key();

  std::array<std::uint8_t, kMaxVars> exponents_{};
  std::uint8_t nvars_ = 0;
  std::uint8_t degree_ = 0;
  std::uint64_t key_ = 0;

  friend bool divides(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial quotient(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
};

// Degree-reverse-lexicographic comparison, x_0 > x_1 > ... > x_n on degree-1
// monomials. Throws std::invalid_argument when variable counts differ.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

// a | b componentwise.
bool divides(const Monomial& a, const Monomial& b);
// componentwise max / difference (b must divide a for quotient).
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

}  // namespace milnor
