#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace peodd {

// Exact scalar type for everything in this project. cpp_rational keeps
// gcd-reduced numerator/denominator with denominator > 0, which is exactly
// the invariant we need; no floating point appears anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace peodd
