#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "quon/matrix.hpp"
#include "quon/mpoly.hpp"
#include "quon/sampling.hpp"
#include "quon/upoly.hpp"

using namespace quon;

namespace {

Matrix<Rational> random_rational_matrix(std::size_t n, Rng& rng) {
    Matrix<Rational> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = sample_free_rational(rng);
    return m;
}

}  // namespace

TEST_CASE("fraction-free determinant matches cofactor expansion", "[matrix]") {
    Rng rng(101);
    for (std::size_t n = 0; n <= 4; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const Matrix<Rational> m = random_rational_matrix(n, rng);
            REQUIRE(bareiss_det(m) == oracles::cofactor_det(m));
        }
    }
}

TEST_CASE("determinant handles zero pivots by row exchange", "[matrix]") {
    Matrix<Rational> m(3, 3, Rational(0));
    m.at(0, 1) = 2;
    m.at(1, 0) = 1;
    m.at(2, 2) = 5;
    REQUIRE(bareiss_det(m) == Rational(-10));
    REQUIRE(bareiss_det(m) == oracles::cofactor_det(m));

    Matrix<Rational> singular(2, 2, Rational(1));
    REQUIRE(bareiss_det(singular) == Rational(0));
}

TEST_CASE("determinant over polynomials", "[matrix]") {
    // [[1, q], [q, 1]] has determinant 1 - q^2.
    Matrix<UPoly> m(2, 2, UPoly::one());
    m.at(0, 1) = UPoly::q_power(1);
    m.at(1, 0) = UPoly::q_power(1);
    REQUIRE(bareiss_det(m) == UPoly::one_minus_q_power(2));

    Rng rng(103);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix<MPoly> p(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                p.at(r, c) = MPoly::variable(VarId(rng.uniform_int(1, 2), rng.uniform_int(1, 2))) +
                             MPoly::one().scaled(GaussianRational(rng.uniform_int(-2, 2)));
        REQUIRE(bareiss_det(p) == oracles::cofactor_det(p));
    }
}

TEST_CASE("leading principal minors agree with per-minor determinants", "[matrix]") {
    Rng rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix<Rational> m = random_rational_matrix(4, rng);
        const std::vector<Rational> minors = leading_principal_minors(m);
        REQUIRE(minors.size() == 4);
        for (std::size_t k = 1; k <= 4; ++k)
            REQUIRE(minors[k - 1] == bareiss_det(m.leading_submatrix(k)));
    }
    // A zero pivot mid-sweep must not derail the remaining minors.
    Matrix<Rational> z(3, 3, Rational(1));
    z.at(0, 0) = 0;
    const std::vector<Rational> minors = leading_principal_minors(z);
    REQUIRE(minors[0] == Rational(0));
    REQUIRE(minors[1] == bareiss_det(z.leading_submatrix(2)));
    REQUIRE(minors[2] == bareiss_det(z));
}

TEST_CASE("adjugate identity over one-parameter polynomials", "[matrix]") {
    Matrix<UPoly> m(2, 2, UPoly::one());
    m.at(0, 1) = UPoly::q_power(1);
    m.at(1, 0) = UPoly::q_power(1);
    const AdjugateResult<UPoly> r = adjugate_and_det(m);
    REQUIRE(r.det == UPoly::one_minus_q_power(2));
    REQUIRE(r.adjugate.at(0, 0) == UPoly::one());
    REQUIRE(r.adjugate.at(0, 1) == -UPoly::q_power(1));
    REQUIRE(r.adjugate.at(1, 0) == -UPoly::q_power(1));
    REQUIRE(r.adjugate.at(1, 1) == UPoly::one());

    const UPolyInverse inv = adjugate_inverse(m);
    REQUIRE(inv.det == r.det);
    REQUIRE(inv.inverse.at(0, 0) == URat::from(UPoly::one(), UPoly::one_minus_q_power(2)));
    REQUIRE(inv.inverse.at(0, 1) == URat::from(-UPoly::q_power(1), UPoly::one_minus_q_power(2)));
}

TEST_CASE("adjugate identity on random rational matrices", "[matrix]") {
    Rng rng(109);
    for (std::size_t n = 1; n <= 4; ++n) {
        const Matrix<Rational> m = random_rational_matrix(n, rng);
        const AdjugateResult<Rational> r = adjugate_and_det(m);
        REQUIRE(r.det == oracles::cofactor_det(m));
        // m * adj = det * I even when m is singular.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (std::size_t s = 0; s < n; ++s) acc += m.at(i, s) * r.adjugate.at(s, j);
                REQUIRE(acc == (i == j ? r.det : Rational(0)));
            }
        }
    }
}

TEST_CASE("adjugate falls back on zero pivots", "[matrix]") {
    Matrix<Rational> m(3, 3, Rational(0));
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(2, 2) = 1;
    const AdjugateResult<Rational> r = adjugate_and_det(m);
    REQUIRE(r.det == Rational(-1));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Rational acc(0);
            for (std::size_t s = 0; s < 3; ++s) acc += m.at(i, s) * r.adjugate.at(s, j);
            REQUIRE(acc == (i == j ? r.det : Rational(0)));
        }
    }
}

TEST_CASE("singular polynomial matrices are rejected by inversion", "[matrix]") {
    Matrix<UPoly> m(2, 2, UPoly::one());
    REQUIRE_THROWS_AS(adjugate_inverse(m), SingularMatrix);
}

TEST_CASE("field inverse round-trips", "[matrix]") {
    Rng rng(113);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix<Rational> m = random_rational_matrix(n, rng);
        const FieldInverse<Rational> inv = field_inverse(m);
        REQUIRE(inv.det == oracles::cofactor_det(m));
        if (!inv.inverse) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (std::size_t s = 0; s < n; ++s) acc += m.at(i, s) * inv.inverse->at(s, j);
                REQUIRE(acc == (i == j ? Rational(1) : Rational(0)));
            }
        }
    }
    Matrix<Rational> singular(2, 2, Rational(3));
    const FieldInverse<Rational> none = field_inverse(singular);
    REQUIRE_FALSE(none.inverse.has_value());
    REQUIRE(none.det == Rational(0));
}

TEST_CASE("integer fraction-free solve", "[matrix]") {
    Rng rng(127);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            Matrix<Integer> a(n, n);
            Matrix<Rational> ar(n, n);
            std::vector<Integer> b(n);
            for (std::size_t r = 0; r < n; ++r) {
                b[r] = rng.uniform_int(-9, 9);
                for (std::size_t c = 0; c < n; ++c) {
                    const int v = rng.uniform_int(-9, 9);
                    a.at(r, c) = v;
                    ar.at(r, c) = v;
                }
            }
            const Rational det = oracles::cofactor_det(ar);
            if (sgn(det) == 0) {
                REQUIRE_THROWS_AS(montante_solve(a, b), SingularMatrix);
                continue;
            }
            const IntegerSolution sol = montante_solve(a, b);
            REQUIRE(Rational(sol.det) == det);
            // Check a * (nums / scale) = b exactly.
            for (std::size_t r = 0; r < n; ++r) {
                Rational acc(0);
                for (std::size_t c = 0; c < n; ++c)
                    acc += Rational(a.at(r, c)) * Rational(sol.numerators[c]);
                REQUIRE(acc == Rational(b[r]) * Rational(sol.scale));
            }
        }
    }
}

TEST_CASE("shape guards", "[matrix]") {
    Matrix<Rational> rect(2, 3, Rational(1));
    REQUIRE_THROWS_AS(bareiss_det(rect), SizeMismatch);
    REQUIRE_THROWS_AS(adjugate_and_det(rect), SizeMismatch);
    REQUIRE_THROWS_AS(field_inverse(rect), SizeMismatch);
    Matrix<Integer> sq(2, 2, Integer(1));
    REQUIRE_THROWS_AS(montante_solve(sq, std::vector<Integer>(3)), SizeMismatch);
}
