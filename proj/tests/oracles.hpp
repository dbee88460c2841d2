#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive and share no code path with the library routines they
// cross-check.

#include <vector>

#include "quon/quon.hpp"

namespace oracles {

// Determinant by cofactor expansion along the first row, O(n!).
template <typename T>
T cofactor_det(const quon::Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw quon::SizeMismatch("oracle determinant needs a square matrix");
    if (n == 0) return T(1);
    if (n == 1) return a.at(0, 0);
    T acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        quon::Matrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor.at(r - 1, mc++) = a.at(r, cc);
            }
        }
        T term = a.at(0, c) * cofactor_det(minor);
        if (c % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// Product over separating value pairs, straight from the definition: a pair
// of values (u, v) contributes q[u][v] when u precedes v in `a` but v
// precedes u in `b`.
inline quon::MPoly separation_product(const quon::Permutation& a, const quon::Permutation& b) {
    const std::size_t n = a.size();
    std::vector<std::size_t> pos_a(n), pos_b(n);
    for (std::size_t k = 0; k < n; ++k) {
        pos_a[static_cast<std::size_t>(a[k]) - 1] = k;
        pos_b[static_cast<std::size_t>(b[k]) - 1] = k;
    }
    quon::Monomial m = quon::Monomial::one();
    for (int u = 1; u <= static_cast<int>(n); ++u) {
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (u == v) continue;
            const std::size_t iu = static_cast<std::size_t>(u) - 1;
            const std::size_t iv = static_cast<std::size_t>(v) - 1;
            if (pos_a[iu] < pos_a[iv] && pos_b[iv] < pos_b[iu])
                m = m * quon::Monomial::var(quon::VarId(u, v));
        }
    }
    return quon::MPoly::monomial(m);
}

// Number of inversions of a one-line permutation, by the quadratic scan.
inline int inversions(const quon::Permutation& p) {
    int count = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++count;
    return count;
}

}  // namespace oracles
