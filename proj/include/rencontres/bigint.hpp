#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rencontres {

// All counting is exact. Int is an arbitrary-precision signed integer;
// Nat is the same type used where values are nonnegative by construction
// (factorials, derangement counts, Stirling/Bell numbers, rencontres rows).
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
  return Rational(num) / Rational(den);
}

// Canonical "p/q" form, e.g. "2/1", "-3/2". Never floating point.
inline std::string rational_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// x^n by repeated multiplication; 0^0 = 1 (empty product).
inline Int int_pow(const Int& x, unsigned long long n) {
  Int acc = 1;
  for (unsigned long long i = 0; i < n; ++i) acc *= x;
  return acc;
}

}  // namespace rencontres
