#pragma once

#include <gmpxx.h>

#include <string>

#include "quon/error.hpp"

namespace quon {

// Exact arbitrary-precision rational. mpq_class maintains the canonical form
// (reduced fraction, positive denominator) that all printing relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational abs_value(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace quon
