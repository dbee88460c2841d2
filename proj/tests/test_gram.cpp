#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "quon/gram.hpp"

using namespace quon;

namespace {

MPoly var(int i, int j) { return MPoly::variable(VarId(i, j)); }

}  // namespace

TEST_CASE("multiset enumeration", "[gram]") {
    REQUIRE(consecutive_word(3) == MultisetWord{1, 2, 3});
    REQUIRE(is_set_word(MultisetWord{3, 1, 2}));
    REQUIRE_FALSE(is_set_word(MultisetWord{1, 2, 1}));

    const auto rearr = multiset_permutations(MultisetWord{2, 1, 1});
    REQUIRE(rearr == std::vector<MultisetWord>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    REQUIRE(multiset_permutations(consecutive_word(3)) == permutations_lex(3));
    REQUIRE_THROWS_AS(multiset_permutations(MultisetWord(9, 1)), ResourceLimit);
    REQUIRE_THROWS_AS(multiset_permutations(MultisetWord{0}), Error);
}

TEST_CASE("fiber enumeration", "[gram]") {
    // Positions 1, 2 carry the letter 1 and position 3 carries 2, so the word
    // (1, 2, 1) lifts to the two position words below.
    const auto fib = fiber_permutations(MultisetWord{1, 2, 1});
    REQUIRE(fib == std::vector<Permutation>{{1, 3, 2}, {2, 3, 1}});
    REQUIRE(fib.front() == Permutation{1, 3, 2});

    // A set word has a single lift.
    REQUIRE(fiber_permutations(MultisetWord{2, 1}) == std::vector<Permutation>{{2, 1}});

    // Fiber sizes multiply over the letter multiplicities.
    REQUIRE(fiber_permutations(MultisetWord{1, 1, 2, 2}).size() == 4);
    REQUIRE(fiber_permutations(MultisetWord{1, 1, 1}).size() == 6);
}

TEST_CASE("gram block golden values", "[gram]") {
    const GramBlock g2 = gram_block(MultisetWord{1, 2});
    REQUIRE(g2.basis == std::vector<MultisetWord>{{1, 2}, {2, 1}});
    REQUIRE(g2.matrix.at(0, 0) == MPoly::one());
    REQUIRE(g2.matrix.at(0, 1) == var(2, 1));
    REQUIRE(g2.matrix.at(1, 0) == var(1, 2));
    REQUIRE(g2.matrix.at(1, 1) == MPoly::one());

    const GramBlock g3 = gram_block(MultisetWord{1, 2, 3});
    REQUIRE(g3.basis.size() == 6);
    // Column word (1,3,2) against row word (1,2,3), and the mirrored entry.
    REQUIRE(g3.matrix.at(0, 1) == var(3, 2));
    REQUIRE(g3.matrix.at(1, 0) == var(2, 3));
    REQUIRE(g3.matrix.at(2, 0) == var(1, 2));
    REQUIRE(g3.matrix.at(5, 0) == var(1, 2) * var(1, 3) * var(2, 3));

    // Words are sorted before use, so any rearrangement names the same block.
    REQUIRE(gram_block(MultisetWord{2, 1}).matrix == g2.matrix);
    REQUIRE_THROWS_AS(gram_block(MultisetWord(7, 1)), ResourceLimit);
}

TEST_CASE("gram block with repeated letters", "[gram]") {
    const GramBlock g = gram_block(MultisetWord{1, 1, 2});
    REQUIRE(g.basis == std::vector<MultisetWord>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    REQUIRE(g.matrix.at(0, 0) == MPoly::one() + var(1, 1));
    REQUIRE(g.matrix.at(0, 1) == var(2, 1) + var(1, 1) * var(2, 1));
}

TEST_CASE("restriction route reproduces the bra-ket route", "[gram]") {
    const std::vector<MultisetWord> words = {
        {}, {1}, {1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 3}, {2, 2, 4}, {1, 1, 2, 2}, {1, 3, 3, 3}};
    for (const auto& w : words) {
        const GramBlock direct = gram_block(w);
        const GramBlock restricted = gram_block_via_restriction(w);
        REQUIRE(direct.basis == restricted.basis);
        REQUIRE(direct.matrix == restricted.matrix);
    }
    REQUIRE_THROWS_AS(gram_block_via_restriction(MultisetWord(6, 1)), ResourceLimit);
}

TEST_CASE("one-parameter specialization", "[gram]") {
    REQUIRE(specialize_single_q(MPoly::one() - var(1, 2) * var(2, 1)) ==
            UPoly::one_minus_q_power(2));
    REQUIRE(specialize_single_q(MPoly::zero()).is_zero());

    // The diagonal entry of the all-equal-letters block is the product of the
    // q-integers [1][2][3][4] in the single surviving variable.
    const GramBlock g = gram_block(MultisetWord{1, 1, 1, 1});
    const UPoly q = UPoly::q_power(1);
    UPoly expected = UPoly::one();
    UPoly bracket = UPoly::one();
    for (int k = 2; k <= 4; ++k) {
        bracket += q.pow(k - 1);
        expected *= bracket;
    }
    REQUIRE(specialize_single_q(g.matrix.at(0, 0)) == expected);

    const Matrix<UPoly> m2 = specialize_matrix(gram_block(MultisetWord{1, 2}).matrix);
    REQUIRE(bareiss_det(m2) == UPoly::one_minus_q_power(2));

    const MPoly imaginary = MPoly::one().scaled(GaussianRational(Rational(0), Rational(1)));
    REQUIRE_THROWS_AS(specialize_single_q(imaginary), Error);
}

TEST_CASE("block determinant reports", "[gram]") {
    SECTION("set word, symbolic closed-form comparison") {
        const BlockDetReport rep = block_determinant(MultisetWord{1, 2, 3}, DetMode::symbolic);
        REQUIRE(rep.is_set);
        REQUIRE(rep.verified);
        REQUIRE(rep.determinant.has_value());
        REQUIRE(*rep.determinant == det_closed_form(consecutive_word(3)).expand());
        REQUIRE(rep.closed_form.flats.size() == 4);
    }
    SECTION("set word, evaluated closed-form comparison") {
        const BlockDetReport rep =
            block_determinant(MultisetWord{1, 2}, DetMode::evaluated, 12, 5);
        REQUIRE(rep.is_set);
        REQUIRE(rep.verified);
        REQUIRE(rep.samples_used == 12);
        REQUIRE_FALSE(rep.determinant.has_value());
    }
    SECTION("set word of size four falls back to evaluation") {
        const BlockDetReport rep = block_determinant(MultisetWord{1, 2, 3, 4}, DetMode::symbolic, 2);
        REQUIRE(rep.is_set);
        REQUIRE(rep.verified);
        REQUIRE(rep.samples_used == 2);
    }
    SECTION("multiset word, symbolic nonvanishing") {
        const BlockDetReport rep = block_determinant(MultisetWord{1, 1, 2}, DetMode::symbolic);
        REQUIRE_FALSE(rep.is_set);
        REQUIRE(rep.verified);
        REQUIRE(rep.determinant.has_value());
        REQUIRE(rep.closed_form.flats.empty());
    }
    SECTION("multiset word, evaluated nonvanishing") {
        const BlockDetReport rep = block_determinant(MultisetWord{1, 1}, DetMode::evaluated);
        REQUIRE_FALSE(rep.is_set);
        REQUIRE(rep.verified);
        REQUIRE(rep.samples_used == kMinSamples);
    }
    SECTION("guards") {
        REQUIRE_THROWS_AS(block_determinant(consecutive_word(5), DetMode::symbolic), ResourceLimit);
        REQUIRE_THROWS_AS(block_determinant(MultisetWord(6, 1), DetMode::evaluated), ResourceLimit);
        REQUIRE_THROWS_AS(block_determinant(MultisetWord{1, 2}, DetMode::evaluated, 0),
                          SampleCountTooSmall);
    }
}

TEST_CASE("denominator bound candidates", "[gram]") {
    REQUIRE(zagier_denominator(1).factors.empty());
    REQUIRE(zagier_denominator(2) == FactoredUPoly{{{2, 1}}});
    REQUIRE(zagier_denominator(3) == FactoredUPoly{{{2, 2}, {6, 1}}});
    REQUIRE(zagier_denominator(4) == FactoredUPoly{{{2, 3}, {6, 2}, {12, 1}}});
    REQUIRE(zagier_denominator(4).to_string() == "(1 - q^2)^3 * (1 - q^6)^2 * (1 - q^12)");
    REQUIRE_THROWS_AS(zagier_denominator(0), Error);
}

TEST_CASE("reduction against a factored denominator", "[gram]") {
    const UPoly num = UPoly::one_minus_q_power(6);
    FactoredUPoly den;
    den.multiply_by(2);
    den.multiply_by(4);
    const URat reduced = reduce_against_factored(num, den);
    REQUIRE(reduced == URat::from(num, den.expand()));
    // (1 - q^6) / ((1 - q^2)(1 - q^4)) leaves a denominator of degree 4.
    REQUIRE(reduced.den.degree() == 4);
    REQUIRE(reduced.num.degree() == 4);

    // Full cancellation yields a polynomial.
    FactoredUPoly square;
    square.multiply_by(2, 2);
    const URat whole =
        reduce_against_factored(UPoly::one_minus_q_power(2) * UPoly::one_minus_q_power(4), square);
    REQUIRE(whole.is_polynomial());
    REQUIRE(whole.num == UPoly::one() + UPoly::q_power(2));

    REQUIRE(reduce_against_factored(UPoly::zero(), den).num.is_zero());
}

TEST_CASE("presenting a polynomial over candidate degrees", "[gram]") {
    FactoredUPoly f;
    f.multiply_by(4, 2);
    const auto ok = factor_over_degrees(f.expand(), std::vector<int>{4});
    REQUIRE(ok.has_value());
    REQUIRE(*ok == f);
    // Peeling is greedy in the order given, so the wrong degree first makes
    // the presentation fail; this only affects display labels.
    REQUIRE_FALSE(factor_over_degrees(f.expand(), std::vector<int>{2}).has_value());
    const auto reordered = factor_over_degrees(
        UPoly::one_minus_q_power(2) * UPoly::one_minus_q_power(6), std::vector<int>{6, 2});
    REQUIRE(reordered.has_value());
    REQUIRE(*reordered == FactoredUPoly{{{2, 1}, {6, 1}}});
}

TEST_CASE("denominator bound holds for small blocks", "[gram]") {
    for (int n = 2; n <= 3; ++n) {
        const ZagierReport rep = zagier_check(n);
        REQUIRE(rep.n == n);
        REQUIRE(rep.det_matches);
        REQUIRE(rep.inverse_verified);
        REQUIRE(rep.bound_holds);
        REQUIRE_FALSE(rep.denominators.empty());
    }
    REQUIRE(zagier_check(2).dimension == 2);
    REQUIRE_THROWS_AS(zagier_check(0), ResourceLimit);
    REQUIRE_THROWS_AS(zagier_check(kMaxZagier + 1), ResourceLimit);
}

TEST_CASE("direct and interpolated denominator routes agree", "[gram]") {
    for (int n = 2; n <= 3; ++n) {
        const ZagierReport direct = zagier_check_direct(n);
        const ZagierReport interp = zagier_check_interpolated(n);
        REQUIRE(direct.bound == interp.bound);
        REQUIRE(direct.det_factored == interp.det_factored);
        REQUIRE(direct.det_matches);
        REQUIRE(interp.det_matches);
        REQUIRE(direct.inverse_verified);
        REQUIRE(interp.inverse_verified);
        REQUIRE(direct.bound_holds);
        REQUIRE(interp.bound_holds);
        REQUIRE(direct.dimension == interp.dimension);
        // Same multiset of reduced denominators with the same entry counts.
        REQUIRE(direct.denominators == interp.denominators);
    }
}

TEST_CASE("positive definiteness at Hermitian points", "[gram]") {
    const PosdefReport rep = posdef_check(MultisetWord{1, 2}, 10, 29);
    REQUIRE(rep.all_positive);
    REQUIRE(rep.samples.size() == 10);
    for (const PosdefSample& s : rep.samples) {
        REQUIRE(s.positive);
        REQUIRE(s.minors.size() == 2);
        REQUIRE(s.minors[0] == Rational(1));
    }

    const PosdefReport multi = posdef_check(MultisetWord{1, 1, 2}, 10, 31);
    REQUIRE(multi.all_positive);

    REQUIRE_THROWS_AS(posdef_check(MultisetWord{1, 2}, 9, 1), SampleCountTooSmall);
    REQUIRE_THROWS_AS(posdef_check(consecutive_word(5), 10, 1), ResourceLimit);
}

TEST_CASE("evaluated block minors at a handmade Hermitian point", "[gram]") {
    Assignment point;
    point.emplace(VarId(1, 2), GaussianRational(make_rational(1, 2)));
    point.emplace(VarId(2, 1), GaussianRational(make_rational(1, 2)));
    const HermitianPoint checked = HermitianPoint::from_assignment(point);
    const Matrix<GaussianRational> m =
        eval_matrix(gram_block(MultisetWord{1, 2}).matrix, checked.values);
    const std::vector<GaussianRational> minors = leading_principal_minors(m);
    REQUIRE(minors[0] == GaussianRational(Rational(1)));
    REQUIRE(minors[1] == GaussianRational(make_rational(3, 4)));
}

TEST_CASE("Hermitian point validation", "[gram]") {
    Assignment missing;
    missing.emplace(VarId(1, 2), GaussianRational(make_rational(1, 2)));
    REQUIRE_THROWS_AS(HermitianPoint::from_assignment(missing), NotHermitian);

    Assignment skew;
    skew.emplace(VarId(1, 2), GaussianRational(Rational(0), make_rational(1, 2)));
    skew.emplace(VarId(2, 1), GaussianRational(Rational(0), make_rational(1, 2)));
    REQUIRE_THROWS_AS(HermitianPoint::from_assignment(skew), NotHermitian);

    Assignment outside;
    outside.emplace(VarId(1, 2), GaussianRational(Rational(1)));
    outside.emplace(VarId(2, 1), GaussianRational(Rational(1)));
    REQUIRE_THROWS_AS(HermitianPoint::from_assignment(outside), DiscViolation);
}
