#include "ftq/rational.hpp"

#include "ftq/errors.hpp"

namespace ftq {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty rational");
  Rational value;
  if (value.set_str(s, 10) != 0) throw InvalidInput("not a rational: '" + s + "'");
  if (value.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

}  // namespace ftq
