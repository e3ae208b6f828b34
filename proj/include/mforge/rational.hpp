#pragma once

// Exact rational arithmetic used everywhere in the engine. No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// base^e for integer e >= 0.
inline Rational pow_rational(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("pow_rational: negative exponent");
    Rational acc = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// n^e as an exact rational, integer n.
inline Rational int_pow(long long n, int e) { return pow_rational(Rational(n), e); }

/// Canonical "num/den" rendering (den always printed, always positive).
inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Compact rendering: "3", "-5", "3/2".
inline std::string to_compact_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace mforge
