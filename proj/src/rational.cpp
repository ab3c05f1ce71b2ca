// rational.cpp — "p/q" parsing kept strict so malformed input fails loudly.

#include "sbkit/rational.hpp"

#include <cctype>

namespace sbkit {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rat(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  const BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rat(BigInt(num), d);
}

std::string to_fraction_string(const Rat& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rat pow2(unsigned exponent) {
  BigInt p = 1;
  p <<= exponent;
  return Rat(p);
}

}  // namespace sbkit
