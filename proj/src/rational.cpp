#include "qrot/rational.hpp"

#include "qrot/errors.hpp"

namespace qrot {

std::string to_fraction_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

std::string to_plain_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return to_fraction_string(r);
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer p(s.substr(0, slash));
    Integer q(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

}  // namespace qrot
