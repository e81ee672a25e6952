#include "polynil/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace polynil {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  if (start == text.size()) throw std::invalid_argument("'" + text + "' is not a decimal integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("'" + text + "' is not a decimal integer");
    }
  }
  return BigInt(text);
}

std::string magnitude_hint(const BigInt& value) {
  std::string digits = (value < 0 ? -value : value).str();
  if (digits.size() <= 7) return {};
  std::string hint = value < 0 ? "~-" : "~";
  hint += digits[0];
  hint += '.';
  hint += digits.substr(1, 2);
  hint += 'e';
  hint += std::to_string(digits.size() - 1);
  return hint;
}

}  // namespace polynil
