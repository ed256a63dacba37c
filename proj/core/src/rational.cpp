#include "skein/rational.hpp"

#include <cctype>

#include "skein/error.hpp"

namespace skein {

Rational parse_rational(const std::string& text) {
  // strict form: [+-]digits[/digits]
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) fail(Errc::parse_error, "bad rational: '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') fail(Errc::parse_error, "bad rational: '" + text + "'");
    ++i;
    digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size())
      fail(Errc::parse_error, "bad rational: '" + text + "'");
  }
  Rational r;
  if (r.set_str(text, 10) != 0)
    fail(Errc::parse_error, "bad rational: '" + text + "'");
  if (r.get_den() == 0)
    fail(Errc::parse_error, "zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace skein
