#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "gsm/error.hpp"

namespace gsm {

// Exact coefficient field: arbitrary-precision rationals, always reduced,
// positive denominator. Backed by Boost.Multiprecision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical wire form "num/den", e.g. "-4/25", "3/1".
inline std::string rational_to_fraction(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Human form: denominator omitted when 1.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a/b" or a bare integer, with optional sign on the numerator.
inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw Error("malformed rational: " + text);
    }
}

inline Int factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

// m!! with the conventions (-1)!! = 0!! = 1.
inline Int double_factorial(int m) {
    Int out = 1;
    for (int i = m; i >= 2; i -= 2) out *= i;
    return out;
}

}  // namespace gsm
