#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spinform {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// canonical form (reduced, positive denominator), which every exact
// comparison in this library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Render as "a" or "a/b" (b > 1).
inline std::string rational_to_string(const Rational& r) {
  Integer n = num(r), d = den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

/// Parse "a" or "a/b". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

}  // namespace spinform
