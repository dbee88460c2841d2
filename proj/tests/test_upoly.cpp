#include <catch2/catch_amalgamated.hpp>

#include "quon/upoly.hpp"

using namespace quon;

TEST_CASE("one-parameter polynomial basics", "[upoly]") {
    REQUIRE(UPoly::zero().is_zero());
    REQUIRE(UPoly::zero().degree() == UPoly::kMinusInfinity);
    REQUIRE(UPoly::one().degree() == 0);
    REQUIRE(UPoly::q_power(3).degree() == 3);
    const UPoly f = UPoly::one_minus_q_power(2);
    REQUIRE(f.coeff(0) == 1);
    REQUIRE(f.coeff(1) == 0);
    REQUIRE(f.coeff(2) == -1);
    REQUIRE(f.coeff(5) == 0);
    REQUIRE_THROWS_AS(UPoly::one_minus_q_power(0), Error);
}

TEST_CASE("one-parameter ring laws", "[upoly]") {
    const UPoly a = UPoly::one_minus_q_power(2) * UPoly::q_power(1) + UPoly(3);
    const UPoly b = UPoly::one_minus_q_power(6);
    const UPoly c = UPoly::q_power(4) - UPoly(1);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == UPoly::zero());
    REQUIRE((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("division with remainder", "[upoly]") {
    const UPoly a = UPoly::one_minus_q_power(6);
    const UPoly b = UPoly::one_minus_q_power(2);
    const auto [quot, rem] = upoly_divmod(a, b);
    REQUIRE(rem.is_zero());
    REQUIRE(quot * b == a);
    const auto [q2, r2] = upoly_divmod(a + UPoly(1), b);
    REQUIRE_FALSE(r2.is_zero());
    REQUIRE(q2 * b + r2 == a + UPoly(1));
    REQUIRE_THROWS_AS(upoly_divmod(a, UPoly::zero()), DivisionByZeroPoly);
}

TEST_CASE("divisibility facts for cyclotomic-style factors", "[upoly]") {
    REQUIRE(upoly_divides(UPoly::one_minus_q_power(2), UPoly::one_minus_q_power(6)));
    REQUIRE_FALSE(upoly_divides(UPoly::one_minus_q_power(4), UPoly::one_minus_q_power(6)));
    // (1 - q^4) does not divide (1 - q^2)^2 (1 - q^6): the i factor of q^4 - 1
    // is not a root of the right side.
    const UPoly big = UPoly::one_minus_q_power(2).pow(2) * UPoly::one_minus_q_power(6);
    REQUIRE_FALSE(upoly_divides(UPoly::one_minus_q_power(4), big));
    REQUIRE(upoly_divides(UPoly::one_minus_q_power(2).pow(2), big));
}

TEST_CASE("gcd via the primitive remainder sequence", "[upoly]") {
    const UPoly a = UPoly::one_minus_q_power(2);
    const UPoly b = UPoly::one_minus_q_power(6);
    const UPoly g = upoly_gcd(a, b);
    // gcd(1 - q^2, 1 - q^6) = 1 - q^2 up to scale; the result is monic.
    REQUIRE(g == a.monic());
    REQUIRE(upoly_gcd(a, UPoly::zero()) == a.monic());
    REQUIRE(upoly_gcd(UPoly::zero(), UPoly::zero()).is_zero());

    const UPoly p = UPoly::one_minus_q_power(4).pow(2) * UPoly::one_minus_q_power(3);
    const UPoly r = UPoly::one_minus_q_power(4) * UPoly::one_minus_q_power(5);
    const UPoly common = upoly_gcd(p, r);
    // Common part is (1 - q^4) * (1 - q): degree 5.
    REQUIRE(common.degree() == 5);
    REQUIRE(upoly_divides(common, p));
    REQUIRE(upoly_divides(common, r));
}

TEST_CASE("reduced rational functions", "[upoly]") {
    const UPoly num = UPoly::one_minus_q_power(2) * UPoly::q_power(1);
    const UPoly den = UPoly::one_minus_q_power(2) * UPoly::one_minus_q_power(6);
    const URat r = URat::from(num, den);
    REQUIRE(r.num * den == num * r.den);
    REQUIRE(r.den.leading_coeff() == 1);
    REQUIRE(upoly_gcd(r.num, r.den).degree() == 0);
    REQUIRE(URat::from(UPoly::zero(), den) == URat{});
    REQUIRE(URat::from(den, den).is_polynomial());
    REQUIRE_THROWS_AS(URat::from(num, UPoly::zero()), DivisionByZeroPoly);
}

TEST_CASE("evaluation by Horner", "[upoly]") {
    const UPoly p = UPoly::one_minus_q_power(3);
    REQUIRE(p.eval(Rational(2)) == Rational(-7));
    REQUIRE(p.eval(Rational(1)) == Rational(0));
    const GaussianRational i(Rational(0), Rational(1));
    // 1 - i^3 = 1 + i.
    REQUIRE(p.eval(i) == GaussianRational(Rational(1), Rational(1)));
}

TEST_CASE("text form", "[upoly]") {
    REQUIRE(UPoly::zero().to_string() == "0");
    REQUIRE(UPoly::one_minus_q_power(2).to_string() == "1 - q^2");
    REQUIRE((UPoly::q_power(1).scaled(Rational(2)) - UPoly(1)).to_string() == "-1 + 2*q");
    const FactoredUPoly f{{{2, 3}, {6, 2}, {12, 1}}};
    REQUIRE(f.to_string() == "(1 - q^2)^3 * (1 - q^6)^2 * (1 - q^12)");
    REQUIRE(FactoredUPoly{}.to_string() == "1");
}

TEST_CASE("factored forms expand correctly", "[upoly]") {
    FactoredUPoly f;
    f.multiply_by(2, 2);
    f.multiply_by(6);
    REQUIRE(f.expand() ==
            UPoly::one_minus_q_power(2).pow(2) * UPoly::one_minus_q_power(6));
    f.multiply_by(2);
    REQUIRE(f.factors == std::vector<std::pair<int, int>>{{2, 3}, {6, 1}});
}

TEST_CASE("interpolation reconstructs polynomials exactly", "[upoly]") {
    const UPoly p = UPoly::one_minus_q_power(4) * UPoly::q_power(2).scaled(make_rational(3, 7)) +
                    UPoly::one_minus_q_power(2);
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= p.degree(); ++k) {
        xs.emplace_back(k - 3);
        ys.push_back(p.eval(Rational(k - 3)));
    }
    REQUIRE(newton_interpolate(xs, ys) == p);
    REQUIRE_THROWS_AS(newton_interpolate({Rational(1), Rational(1)}, {Rational(0), Rational(1)}),
                      Error);
    REQUIRE_THROWS_AS(newton_interpolate({}, {}), Error);
}
