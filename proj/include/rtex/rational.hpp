#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rtex {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

} // namespace rtex
