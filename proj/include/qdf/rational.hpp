#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qdf {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (canonical form is maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on violated preconditions and internal consistency failures.
/// Every computation here is exact, so any mismatch is a hard error.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline long long to_long(const Rational& r) {
  if (!is_integer(r)) throw Error("expected an integer, got " + r.str());
  return numerator(r).convert_to<long long>();
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace qdf
