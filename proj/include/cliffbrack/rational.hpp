#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cliffbrack {

/// Exact rational coefficient. Stored reduced with positive denominator;
/// never floating point. All coefficients that arise in reduction are +-2^k,
/// but evaluation at random rational points needs full rational arithmetic.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational pow2(int k) {
    Rational r = 1;
    if (k >= 0)
        r = Integer(1) << k;
    else
        r = Rational(1, Integer(1) << (-k));
    return r;
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace cliffbrack
