#include "extbayes/rational.hpp"

#include <cctype>

#include "extbayes/errors.hpp"

namespace extbayes {

std::string rational_to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&text]() -> Rational {
    throw ScenarioError("malformed rational: '" + std::string(text) + "'");
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }

  const auto read_digits = [&](Integer& out) {
    std::size_t start = pos;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return pos > start;
  };

  Integer num;
  if (!read_digits(num)) return fail();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den)) return fail();
    if (den == 0) return fail();
  }
  if (pos != text.size()) return fail();
  Rational value(num, den);
  return negative ? -value : value;
}

}  // namespace extbayes
