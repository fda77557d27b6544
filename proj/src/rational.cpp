#include "liegeo/rational.hpp"

#include <cctype>

namespace liegeo {

std::optional<Rational> parse_rational(std::string_view text) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](BigInt& out) -> bool {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return true;
  };
  BigInt num;
  if (!read_digits(num)) return std::nullopt;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den) || den == 0) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

}  // namespace liegeo
