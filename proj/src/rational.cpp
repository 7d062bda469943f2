#include "milnor/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace milnor {

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i >= text.size()) throw std::invalid_argument("malformed rational literal");
  bool seen_slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (seen_slash || j + 1 == text.size()) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
      }
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  Rational value(std::string(text), 10);
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace milnor
