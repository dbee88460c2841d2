#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "quon/error.hpp"
#include "quon/gaussian.hpp"
#include "quon/rational.hpp"

namespace quon {

// Dense univariate polynomial in the single deformation parameter q, with
// exact rational coefficients. coeff(k) is the coefficient of q^k; the
// internal vector never has a zero leading entry.
class UPoly {
  public:
    // degree() of the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    UPoly() = default;
    UPoly(long c) {  // NOLINT: implicit by design
        if (c != 0) c_.emplace_back(c);
    }
    explicit UPoly(Rational c) {
        if (sgn(c) != 0) c_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
        trim();
    }

    static UPoly zero() { return {}; }
    static UPoly one() { return UPoly(1); }

    static UPoly q_power(int e) {
        if (e < 0) throw Error("UPoly: negative power");
        UPoly p;
        p.c_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
        p.c_.back() = 1;
        return p;
    }

    // 1 - q^d, the building block of every factored form in this library.
    static UPoly one_minus_q_power(int d) {
        if (d < 1) throw Error("UPoly: power must be positive");
        UPoly p;
        p.c_.assign(static_cast<std::size_t>(d) + 1, Rational(0));
        p.c_[0] = 1;
        p.c_.back() = -1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }

    Rational coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const Rational& leading_coeff() const {
        if (c_.empty()) throw Error("UPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            if (k < a.c_.size()) r.c_[k] += a.c_[k];
            if (k < b.c_.size()) r.c_[k] += b.c_[k];
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly scaled(const Rational& c) const {
        if (sgn(c) == 0) return {};
        UPoly r = *this;
        for (auto& x : r.c_) x *= c;
        return r;
    }

    UPoly pow(int e) const {
        if (e < 0) throw Error("UPoly: negative power");
        UPoly r = one();
        UPoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + GaussianRational(*it);
        return acc;
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return scaled(Rational(1) / leading_coeff());
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

// Euclidean division; the divisor must be nonzero.
inline std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("UPoly division by zero polynomial");
    if (a.degree() < b.degree()) return {UPoly::zero(), a};
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    const Rational& lc = b.leading_coeff();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational f = rem[static_cast<std::size_t>(k + db)] / lc;
        if (sgn(f) == 0) continue;
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

// True iff a divides b (a must be nonzero).
inline bool upoly_divides(const UPoly& a, const UPoly& b) {
    return upoly_divmod(b, a).second.is_zero();
}

inline UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = upoly_divmod(a, b);
    if (!r.is_zero()) throw Error("UPoly: non-exact division in fraction-free elimination");
    return q;
}

namespace detail {

// Primitive integer image of a rational polynomial: content 1, positive
// leading coefficient. The rational scale factor is irrelevant for gcd.
inline std::vector<Integer> primitive_integer_image(const UPoly& p) {
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Integer> z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(Integer(c.get_num() * (den_lcm / c.get_den())));
    Integer content(0);
    for (const auto& x : z) content = gcd(content, x);
    if (sgn(z.back()) < 0) content = -content;
    for (auto& x : z) x /= content;
    return z;
}

inline void trim_z(std::vector<Integer>& z) {
    while (!z.empty() && sgn(z.back()) == 0) z.pop_back();
}

inline void make_primitive_z(std::vector<Integer>& z) {
    trim_z(z);
    if (z.empty()) return;
    Integer content(0);
    for (const auto& x : z) content = gcd(content, x);
    if (sgn(z.back()) < 0) content = -content;
    for (auto& x : z) x /= content;
}

// Pseudo-remainder of a by b over the integers: a scaled by powers of lc(b)
// so every elimination step stays integral. Each pass cancels the leading
// entry of a, so the degree strictly decreases and the loop terminates.
inline std::vector<Integer> pseudo_rem_z(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer& lc = b.back();
    while (a.size() >= b.size()) {
        Integer top = a.back();
        for (auto& x : a) x *= lc;
        const auto shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
        trim_z(a);
    }
    return a;
}

}  // namespace detail

// Monic gcd via the primitive polynomial remainder sequence over the
// integers, which keeps intermediate coefficients from exploding.
inline UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) return UPoly::zero();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> x = detail::primitive_integer_image(a);
    std::vector<Integer> y = detail::primitive_integer_image(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<Integer> r = detail::pseudo_rem_z(std::move(x), y);
        detail::make_primitive_z(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& z : x) out.emplace_back(z);
    return UPoly(std::move(out)).monic();
}

// Unique polynomial of degree < xs.size() through the points (xs[k], ys[k]),
// by Newton's divided differences. Nodes must be pairwise distinct.
inline UPoly newton_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw Error("interpolation requires matching nonempty node and value lists");
    const std::size_t m = xs.size();
    std::vector<Rational> c = ys;  // divided differences, built in place
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t k = m; k-- > level;) {
            Rational dx = xs[k] - xs[k - level];
            if (sgn(dx) == 0) throw Error("interpolation nodes must be distinct");
            c[k] = (c[k] - c[k - 1]) / dx;
        }
    }
    UPoly p(c[m - 1]);
    for (std::size_t k = m - 1; k-- > 0;) {
        p = p * UPoly(std::vector<Rational>{-xs[k], Rational(1)}) + UPoly(c[k]);
    }
    return p;
}

// Reduced univariate rational function: gcd(num, den) = 1 and den is monic.
// Zero is represented as 0/1.
struct URat {
    UPoly num;
    UPoly den = UPoly::one();

    static URat from(const UPoly& n, const UPoly& d) {
        if (d.is_zero()) throw DivisionByZeroPoly("URat with zero denominator");
        if (n.is_zero()) return {UPoly::zero(), UPoly::one()};
        UPoly g = upoly_gcd(n, d);
        UPoly rn = exact_div(n, g);
        UPoly rd = exact_div(d, g);
        Rational lc = rd.leading_coeff();
        return {rn.scaled(Rational(1) / lc), rd.scaled(Rational(1) / lc)};
    }

    bool is_polynomial() const { return den.is_one(); }

    friend bool operator==(const URat& a, const URat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const URat& a, const URat& b) { return !(a == b); }

    std::string to_string() const;
};

inline std::string UPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string body;
        if (k == 0) {
            body = quon::to_string(a);
        } else {
            std::string mono = k == 1 ? "q" : "q^" + std::to_string(k);
            body = a == 1 ? mono : quon::to_string(a) + "*" + mono;
        }
        if (s.empty()) {
            s = neg ? "-" + body : body;
        } else {
            s += neg ? " - " : " + ";
            s += body;
        }
    }
    return s;
}

inline std::string to_string(const UPoly& p) { return p.to_string(); }

inline std::string URat::to_string() const {
    if (is_polynomial()) return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

inline std::string to_string(const URat& r) { return r.to_string(); }

// Product of (1 - q^d)^e factors, kept factored. Degrees are stored sorted
// ascending; exponents are positive.
struct FactoredUPoly {
    std::vector<std::pair<int, int>> factors;  // (d, e): (1 - q^d)^e

    void multiply_by(int d, int e = 1) {
        for (auto& [fd, fe] : factors) {
            if (fd == d) {
                fe += e;
                return;
            }
        }
        factors.emplace_back(d, e);
        std::sort(factors.begin(), factors.end());
    }

    UPoly expand() const {
        UPoly p = UPoly::one();
        for (const auto& [d, e] : factors) p *= UPoly::one_minus_q_power(d).pow(e);
        return p;
    }

    friend bool operator==(const FactoredUPoly& a, const FactoredUPoly& b) {
        return a.factors == b.factors;
    }
    friend bool operator!=(const FactoredUPoly& a, const FactoredUPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto& [d, e] : factors) {
            if (!s.empty()) s += " * ";
            s += "(1 - q^" + std::to_string(d) + ")";
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

inline std::string to_string(const FactoredUPoly& f) { return f.to_string(); }

}  // namespace quon
