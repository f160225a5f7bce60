#pragma once

#include <gmpxx.h>

#include <string>

#include "g2def/errors.hpp"

namespace g2def {

// Arbitrary-precision rational, always reduced with positive denominator.
// mpq_class keeps exactly that canonical form after every operation as long
// as values are built through make_rational / parse_rational below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw division_by_zero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Encoded as "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    for (char c : s)
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw parse_error("bad character in rational: '" + s + "'");
    try {
        Rational r(s);
        if (sgn(r.get_den()) == 0) throw division_by_zero();
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: '" + s + "'");
    }
}

} // namespace g2def
