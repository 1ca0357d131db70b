#include "powmat/exact.hpp"

#include <cctype>
#include <ostream>

namespace powmat {

Int parse_int(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("bad integer literal '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

Rational Rational::parse(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace powmat
