#include "milnor/parser.hpp"

#include <cctype>
#include <string>

namespace milnor {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const VariableSet& vars, const ParseOptions& options)
      : src_(src), vars_(vars), options_(options) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Polynomial parse_expr() {
    Polynomial acc(vars_.size());
    bool negate = eat('-');
    acc = parse_term();
    if (negate) acc = -acc;
    while (true) {
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    bool negate = eat('-');
    Polynomial acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return negate ? -acc : acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (eat('^')) {
      int e = parse_nat("exponent");
      if (e > options_.max_exponent) {
        fail("exponent " + std::to_string(e) + " exceeds the configured limit of " +
             std::to_string(options_.max_exponent));
      }
      return poly_pow(base, e);
    }
    return base;
  }

  Polynomial parse_base() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_rational() {
    std::string digits = read_digits("number");
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      std::string den = read_digits("denominator");
      return Polynomial::constant(rational_from_string(digits + "/" + den), vars_.size());
    }
    return Polynomial::constant(rational_from_string(digits), vars_.size());
  }

  Polynomial parse_variable() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(src_.substr(start, pos_ - start));
    // Positional form: identifier immediately followed by (nat). Explicit
    // '*' is required for multiplication, so no ambiguity arises.
    if (pos_ < src_.size() && src_[pos_] == '(') {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        std::string idx = read_digits("variable index");
        if (pos_ < src_.size() && src_[pos_] == ')') {
          ++pos_;
          name += "(" + idx + ")";
        } else {
          pos_ = save;
        }
      } else {
        pos_ = save;
      }
    }
    auto index = vars_.index_of(name);
    if (!index) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    return Polynomial::variable(*index, vars_.size());
  }

  int parse_nat(const std::string& what) {
    skip_space();
    std::string digits = read_digits(what);
    if (digits.size() > 9) fail(what + " literal too large");
    return std::stoi(digits);
  }

  std::string read_digits(const std::string& what) {
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      fail("expected " + what);
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string_view src_;
  const VariableSet& vars_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const VariableSet& vars,
                            const ParseOptions& options) {
  return Parser(src, vars, options).run();
}

}  // namespace milnor
