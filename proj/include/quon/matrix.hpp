#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quon/error.hpp"
#include "quon/gaussian.hpp"
#include "quon/rational.hpp"
#include "quon/upoly.hpp"

namespace quon {

// Field scalars divide exactly by definition.
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw Error("Rational: division by zero");
    return a / b;
}
// Integer division inside fraction-free elimination is exact by construction.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw Error("Integer: division by zero");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline GaussianRational exact_div(const GaussianRational& a, const GaussianRational& b) {
    return a / b;
}

// Minimal dense row-major matrix.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T init = T())
        : rows_(rows), cols_(cols), data_(rows * cols, std::move(init)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    Matrix leading_submatrix(std::size_t k) const {
        Matrix m(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) m.at(r, c) = at(r, c);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Fraction-free (Bareiss) determinant with row pivoting. Every intermediate
// entry is a minor of the input, so all divisions are exact over any
// integral domain providing exact_div.
template <typename T>
T bareiss_det(Matrix<T> a) {
    if (a.rows() != a.cols()) throw SizeMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    T prev = T(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a.at(k, k))) {
            std::size_t r = k + 1;
            while (r < n && is_zero(a.at(r, k))) ++r;
            if (r == n) return T(0);
            a.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    T det = a.at(n - 1, n - 1);
    return negate ? T(-det) : det;
}

// Leading principal minors d_1..d_n in one fraction-free elimination pass:
// after step k the pivot entry is exactly the (k+1)-th leading minor. Falls
// back to independent determinants when a zero pivot interrupts the sweep.
template <typename T>
std::vector<T> leading_principal_minors(const Matrix<T>& input) {
    if (input.rows() != input.cols()) throw SizeMismatch("minors of a non-square matrix");
    const std::size_t n = input.rows();
    std::vector<T> minors;
    minors.reserve(n);
    Matrix<T> a = input;
    T prev = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(a.at(k, k))) {
            // Zero minor: pivoting would reorder rows and change the leading
            // minors, so finish with direct determinants.
            for (std::size_t m = k; m < n; ++m)
                minors.push_back(bareiss_det(input.leading_submatrix(m + 1)));
            return minors;
        }
        minors.push_back(a.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return minors;
}

template <typename T>
struct AdjugateResult {
    Matrix<T> adjugate;
    T det;
};

namespace detail {

// Direct adjugate from cofactors. Quadratically many determinants; correct
// for any input, used as the fallback when the fast path hits a zero pivot.
template <typename T>
AdjugateResult<T> cofactor_adjugate(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    Matrix<T> adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<T> minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = a.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            T cof = bareiss_det(std::move(minor));
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : T(-cof);
        }
    }
    return {std::move(adj), bareiss_det(a)};
}

}  // namespace detail

// Adjugate and determinant by fraction-free Gauss-Jordan elimination on the
// augmented matrix [A | I]: after the sweep the left block is det * I and the
// right block is adj(A). One O(n^3) pass of exact polynomial arithmetic.
template <typename T>
AdjugateResult<T> adjugate_and_det(const Matrix<T>& input) {
    if (input.rows() != input.cols()) throw SizeMismatch("adjugate of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return {Matrix<T>(0, 0), T(1)};
    Matrix<T> aug(n, 2 * n, T(0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = input.at(r, c);
        aug.at(r, n + r) = T(1);
    }
    T prev = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        const T pivot = aug.at(k, k);
        if (is_zero(pivot)) return detail::cofactor_adjugate(input);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                aug.at(i, j) = exact_div(pivot * aug.at(i, j) - aug.at(i, k) * aug.at(k, j), prev);
            }
            aug.at(i, k) = T(0);
        }
        prev = pivot;
    }
    const T det = aug.at(n - 1, n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!(aug.at(k, k) == det)) return detail::cofactor_adjugate(input);
    }
    Matrix<T> adj(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) adj.at(r, c) = aug.at(r, n + c);
    return {std::move(adj), det};
}

// Exact solution of a nonsingular integer linear system a * x = rhs by
// fraction-free Gauss-Jordan elimination on the augmented matrix. All
// intermediate values stay integral; the solution is numerators[i] / scale
// and det(a) is returned separately (scale differs from it only in sign,
// picked up by row swaps).
struct IntegerSolution {
    std::vector<Integer> numerators;
    Integer scale;
    Integer det;
};

inline IntegerSolution montante_solve(const Matrix<Integer>& a, const std::vector<Integer>& rhs) {
    if (a.rows() != a.cols()) throw SizeMismatch("linear solve needs a square matrix");
    if (rhs.size() != a.rows()) throw SizeMismatch("right-hand side length mismatch");
    const std::size_t n = a.rows();
    Matrix<Integer> w(n, n + 1, Integer(0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) w.at(r, c) = a.at(r, c);
        w.at(r, n) = rhs[r];
    }
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(w.at(p, k))) ++p;
        if (p == n) throw SingularMatrix("integer linear system is singular");
        if (p != k) {
            w.swap_rows(p, k);
            sign = -sign;
        }
        const Integer pivot = w.at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == k) continue;
                w.at(i, j) = exact_div(pivot * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
            }
            w.at(i, k) = 0;
        }
        prev = pivot;
    }
    const Integer scale = w.at(n - 1, n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) != scale) throw Error("fraction-free solve lost diagonal agreement");
    }
    IntegerSolution out;
    out.numerators.reserve(n);
    for (std::size_t r = 0; r < n; ++r) out.numerators.push_back(w.at(r, n));
    out.scale = scale;
    out.det = sign > 0 ? scale : Integer(-scale);
    return out;
}

// Determinant and inverse over an exact field (Rational, GaussianRational) by
// Gauss-Jordan elimination with first-nonzero pivoting. Returns the inverse in
// `inverse` when the matrix is nonsingular; `det` is always the determinant.
template <typename T>
struct FieldInverse {
    std::optional<Matrix<T>> inverse;
    T det = T(0);
};

template <typename T>
FieldInverse<T> field_inverse(Matrix<T> a) {
    if (a.rows() != a.cols()) throw SizeMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> inv = Matrix<T>::identity(n);
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(a.at(pivot, k))) ++pivot;
        if (pivot == n) return {std::nullopt, T(0)};
        if (pivot != k) {
            a.swap_rows(pivot, k);
            inv.swap_rows(pivot, k);
            det = T(0) - det;
        }
        const T scale = a.at(k, k);
        det = det * scale;
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) = a.at(k, j) / scale;
            inv.at(k, j) = inv.at(k, j) / scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const T f = a.at(i, k);
            if (is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(k, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return {std::move(inv), det};
}

struct UPolyInverse {
    Matrix<URat> inverse;  // entries fully reduced
    UPoly det;
};

// Exact inverse of a univariate polynomial matrix as reduced rational
// functions adj(A)/det(A).
inline UPolyInverse adjugate_inverse(const Matrix<UPoly>& a) {
    AdjugateResult<UPoly> r = adjugate_and_det(a);
    if (r.det.is_zero()) throw SingularMatrix("polynomial matrix has zero determinant");
    Matrix<URat> inv(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            inv.at(i, j) = URat::from(r.adjugate.at(i, j), r.det);
    return {std::move(inv), std::move(r.det)};
}

}  // namespace quon
