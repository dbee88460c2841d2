#pragma once

#include <string>

#include "quon/error.hpp"
#include "quon/rational.hpp"

namespace quon {

// Gaussian rational: an exact complex number re + im*i with rational parts.
// These form a field, which is what exact elimination over evaluated
// matrices requires.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conjugate() const { return {re, Rational(-im)}; }

    // Squared modulus; rational, so unit-disc membership is an exact test.
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw Error("GaussianRational: division by zero");
        Rational n2 = o.norm2();
        Rational r = (re * o.re + im * o.im) / n2;
        Rational i = (im * o.re - re * o.im) / n2;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conjugate(const GaussianRational& z) { return z.conjugate(); }

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

// Canonical text form: "a/b", "a/b*i", or "a/b+c/d*i" (minus signs folded in).
inline std::string to_string(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    if (sgn(z.im) == 0) return to_string(z.re);
    std::string imag = to_string(abs_value(z.im)) + "*i";
    if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + imag;
    return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + imag;
}

}  // namespace quon
