#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quon/error.hpp"
#include "quon/gaussian.hpp"

namespace quon {

// Identifies the deformation variable q[i][j]. Both indices are 1-based and
// independent: q[i][j] and q[j][i] are distinct variables.
struct VarId {
    int i = 0;
    int j = 0;

    VarId() = default;
    VarId(int i_, int j_) : i(i_), j(j_) {
        if (i < 1 || j < 1) throw Error("VarId: indices must be positive");
    }

    VarId transposed() const { return {j, i}; }

    friend bool operator==(VarId a, VarId b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(VarId a, VarId b) { return !(a == b); }
    friend bool operator<(VarId a, VarId b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

inline std::string to_string(VarId v) {
    return "q[" + std::to_string(v.i) + "][" + std::to_string(v.j) + "]";
}

// Power product of variables. Factors are kept sorted by VarId with positive
// exponents; the empty list is the constant monomial 1.
class Monomial {
  public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial one() { return {}; }

    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        if (exp < 0) throw Error("Monomial: negative exponent");
        if (exp > 0) m.factors_.emplace_back(v, exp);
        return m;
    }

    static Monomial from_factors(std::vector<Factor> factors) {
        Monomial m;
        m.factors_ = std::move(factors);
        m.normalize();
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    int exponent_of(VarId v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first) {
                r.factors_.push_back(*a++);
            } else if (b->first < a->first) {
                r.factors_.push_back(*b++);
            } else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, o.factors_.end());
        return r;
    }

    bool divides(const Monomial& o) const {
        auto a = factors_.begin();
        auto b = o.factors_.begin();
        while (a != factors_.end()) {
            while (b != o.factors_.end() && b->first < a->first) ++b;
            if (b == o.factors_.end() || !(b->first == a->first) || b->second < a->second) return false;
            ++a;
        }
        return true;
    }

    // Exact quotient; caller must ensure divisibility.
    Monomial divide_by(const Monomial& d) const {
        Monomial r;
        auto a = factors_.begin();
        auto b = d.factors_.begin();
        while (a != factors_.end()) {
            if (b != d.factors_.end() && a->first == b->first) {
                int e = a->second - b->second;
                if (e < 0) throw Error("Monomial: non-exact division");
                if (e > 0) r.factors_.emplace_back(a->first, e);
                ++a;
                ++b;
            } else {
                r.factors_.push_back(*a++);
            }
        }
        if (b != d.factors_.end()) throw Error("Monomial: non-exact division");
        return r;
    }

    // Transposes every variable index pair; used by the conjugation involution.
    Monomial conjugated() const {
        std::vector<Factor> f;
        f.reserve(factors_.size());
        for (const auto& [v, e] : factors_) f.emplace_back(v.transposed(), e);
        return from_factors(std::move(f));
    }

    Monomial renamed(const std::map<VarId, VarId>& renaming) const {
        std::vector<Factor> f;
        f.reserve(factors_.size());
        for (const auto& [v, e] : factors_) {
            auto it = renaming.find(v);
            f.emplace_back(it == renaming.end() ? v : it->second, e);
        }
        return from_factors(std::move(f));
    }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += "*";
            s += quon::to_string(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  private:
    void normalize() {
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        std::vector<Factor> merged;
        merged.reserve(factors_.size());
        for (const auto& [v, e] : factors_) {
            if (e < 0) throw Error("Monomial: negative exponent");
            if (e == 0) continue;
            if (!merged.empty() && merged.back().first == v) {
                merged.back().second += e;
            } else {
                merged.emplace_back(v, e);
            }
        }
        factors_ = std::move(merged);
    }

    std::vector<Factor> factors_;
};

// Plain lexicographic order on exponent vectors (variables scanned in VarId
// order). Multiplication-compatible, so polynomial division may use leading
// terms under it.
struct MonomialLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto x = a.factors().begin(), xe = a.factors().end();
        auto y = b.factors().begin(), ye = b.factors().end();
        while (x != xe || y != ye) {
            if (x == xe) return true;   // a runs out: exponent 0 < positive
            if (y == ye) return false;  // b runs out
            if (x->first != y->first) {
                // The smaller VarId has a positive exponent on one side only.
                return y->first < x->first;
            }
            if (x->second != y->second) return x->second < y->second;
            ++x;
            ++y;
        }
        return false;
    }
};

// Canonical display order: lexicographic on the sorted factor lists, so the
// constant term prints first. Not multiplication-compatible; printing only.
struct MonomialPrintLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        return std::lexicographical_compare(
            fa.begin(), fa.end(), fb.begin(), fb.end(), [](const auto& x, const auto& y) {
                return x.first != y.first ? x.first < y.first : x.second < y.second;
            });
    }
};

// Sparse multivariate polynomial with Gaussian-rational coefficients.
// Invariant: the term map never holds a zero coefficient.
class MPoly {
  public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialLexLess>;

    MPoly() = default;
    MPoly(long c) { add_term(Monomial::one(), GaussianRational(c)); }  // NOLINT
    explicit MPoly(GaussianRational c) { add_term(Monomial::one(), std::move(c)); }

    static MPoly zero() { return {}; }
    static MPoly one() { return MPoly(1); }
    static MPoly variable(VarId v) {
        MPoly p;
        p.add_term(Monomial::var(v), GaussianRational(1));
        return p;
    }
    static MPoly monomial(Monomial m, GaussianRational c = GaussianRational(1)) {
        MPoly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    GaussianRational constant_term() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    void add_term(Monomial m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        if (this == &o) return *this = scaled(GaussianRational(2));
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        if (this == &o) return *this = zero();
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const GaussianRational& c) const {
        MPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    MPoly pow(int e) const {
        if (e < 0) throw Error("MPoly: negative power");
        MPoly r = one();
        MPoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    std::string to_string() const;

  private:
    TermMap terms_;
};

inline MPoly operator*(const MPoly& p, const GaussianRational& c) { return p.scaled(c); }
inline MPoly operator*(const GaussianRational& c, const MPoly& p) { return p.scaled(c); }

// Conjugation involution: coefficients are complex-conjugated and every
// variable q[i][j] becomes q[j][i].
inline MPoly mpoly_conjugate(const MPoly& p) {
    MPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m.conjugated(), c.conjugate());
    return r;
}

using Assignment = std::map<VarId, GaussianRational>;

// Evaluates at a point; every variable occurring in p must be assigned.
inline GaussianRational mpoly_eval(const MPoly& p, const Assignment& point) {
    GaussianRational acc;
    for (const auto& [m, c] : p.terms()) {
        GaussianRational v = c;
        for (const auto& [var, exp] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end()) throw MissingAssignment("no value for " + to_string(var));
            for (int k = 0; k < exp; ++k) v *= it->second;
        }
        acc += v;
    }
    return acc;
}

// Renames variables; variables not mentioned in the map stay fixed. Distinct
// variables may collapse onto one target, merging exponents.
inline MPoly mpoly_substitute_vars(const MPoly& p, const std::map<VarId, VarId>& renaming) {
    MPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m.renamed(renaming), c);
    return r;
}

// Exact single-divisor division. Returns the quotient when d divides p,
// std::nullopt otherwise; decisive because the leading term of a product is
// the product of leading terms under a multiplication-compatible order.
inline std::optional<MPoly> mpoly_try_divide(const MPoly& p, const MPoly& d) {
    if (d.is_zero()) throw DivisionByZeroPoly("MPoly division by zero polynomial");
    MPoly q;
    MPoly r = p;
    const auto& dlead = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        if (!dlead.first.divides(rlead.first)) return std::nullopt;
        MPoly t = MPoly::monomial(rlead.first.divide_by(dlead.first), rlead.second / dlead.second);
        q += t;
        r -= t * d;
    }
    return q;
}

inline MPoly exact_div(const MPoly& a, const MPoly& b) {
    auto q = mpoly_try_divide(a, b);
    if (!q) throw Error("MPoly: non-exact division in fraction-free elimination");
    return *q;
}

inline bool mpoly_divides(const MPoly& d, const MPoly& p) {
    if (d.is_zero()) throw DivisionByZeroPoly("MPoly divisibility by zero polynomial");
    return mpoly_try_divide(p, d).has_value();
}

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

namespace detail {

// Splits a term into a printable body and a leading sign so terms can be
// joined with " + " / " - ". Complex coefficients never claim the sign.
inline std::pair<bool, std::string> format_term(const Monomial& m, const GaussianRational& c) {
    const bool has_mono = !m.is_one();
    if (sgn(c.im) == 0) {
        bool neg = sgn(c.re) < 0;
        Rational a = abs_value(c.re);
        if (!has_mono) return {neg, to_string(a)};
        if (a == 1) return {neg, m.to_string()};
        return {neg, to_string(a) + "*" + m.to_string()};
    }
    if (sgn(c.re) == 0) {
        bool neg = sgn(c.im) < 0;
        std::string body = to_string(abs_value(c.im)) + "*i";
        if (has_mono) body += "*" + m.to_string();
        return {neg, body};
    }
    std::string coeff = to_string(c);
    if (!has_mono) return {false, coeff};
    return {false, "(" + coeff + ")*" + m.to_string()};
}

}  // namespace detail

inline std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    MonomialPrintLess less;
    std::sort(ordered.begin(), ordered.end(),
              [&](const auto* a, const auto* b) { return less(a->first, b->first); });
    std::string s;
    for (const auto* t : ordered) {
        auto [neg, body] = detail::format_term(t->first, t->second);
        if (s.empty()) {
            s = neg ? "-" + body : body;
        } else {
            s += neg ? " - " : " + ";
            s += body;
        }
    }
    return s;
}

inline std::string to_string(const MPoly& p) { return p.to_string(); }

}  // namespace quon
