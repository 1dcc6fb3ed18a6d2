#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "equicut/errors.hpp"

namespace equicut {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Int rational_num(const Rational& q) { return numerator(q); }
inline Int rational_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Int floor_int(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int ceil_int(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n > 0 && t * d != n) ++t;
    return t;
}

/// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses the output of to_string back; exact round trip.
inline Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + s);
        return Rational(num) / Rational(den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + s + "': " + e.what());
    }
}

} // namespace equicut
