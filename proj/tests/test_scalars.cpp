#include <catch2/catch_amalgamated.hpp>

#include "quon/gaussian.hpp"
#include "quon/rational.hpp"

using namespace quon;

TEST_CASE("rational construction canonicalizes", "[scalars]") {
    REQUIRE(make_rational(2, 4) == make_rational(1, 2));
    REQUIRE(make_rational(-1, -2) == make_rational(1, 2));
    REQUIRE(make_rational(1, -2) == make_rational(-1, 2));
    REQUIRE(make_rational(0, 7) == Rational(0));
    REQUIRE_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("rational text form", "[scalars]") {
    REQUIRE(to_string(make_rational(3, 4)) == "3/4");
    REQUIRE(to_string(Rational(-3)) == "-3");
    REQUIRE(to_string(Rational(0)) == "0");
    REQUIRE(to_string(make_rational(-3, 4)) == "-3/4");
}

TEST_CASE("rational helpers", "[scalars]") {
    REQUIRE(is_zero(Rational(0)));
    REQUIRE_FALSE(is_zero(make_rational(1, 9)));
    REQUIRE(abs_value(make_rational(-5, 3)) == make_rational(5, 3));
    REQUIRE(sgn(make_rational(-5, 3)) < 0);
}

TEST_CASE("gaussian rational field laws", "[scalars]") {
    const GaussianRational a(make_rational(1, 2), make_rational(-3, 4));
    const GaussianRational b(make_rational(2, 5), make_rational(1, 3));
    const GaussianRational c(Rational(7), make_rational(-1, 6));

    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == GaussianRational());
    REQUIRE((a * b) / b == a);
    REQUIRE(a / a == GaussianRational(1));
}

TEST_CASE("gaussian rational conjugation and modulus", "[scalars]") {
    const GaussianRational z(make_rational(3, 5), make_rational(4, 5));
    REQUIRE(z.conjugate().conjugate() == z);
    REQUIRE((z * z.conjugate()).is_real());
    REQUIRE(z.norm2() == Rational(1));
    REQUIRE((z * z.conjugate()).re == z.norm2());
    REQUIRE_FALSE(z.is_real());
    REQUIRE(GaussianRational(Rational(2)).is_real());
}

TEST_CASE("gaussian rational division by zero throws", "[scalars]") {
    REQUIRE_THROWS_AS(GaussianRational(1) / GaussianRational(), Error);
}

TEST_CASE("gaussian rational text form", "[scalars]") {
    REQUIRE(to_string(GaussianRational()) == "0");
    REQUIRE(to_string(GaussianRational(make_rational(1, 2))) == "1/2");
    REQUIRE(to_string(GaussianRational(Rational(0), make_rational(1, 2))) == "1/2*i");
    REQUIRE(to_string(GaussianRational(Rational(0), make_rational(-1, 2))) == "-1/2*i");
    REQUIRE(to_string(GaussianRational(make_rational(1, 2), make_rational(-3, 4))) ==
            "1/2-3/4*i");
    REQUIRE(to_string(GaussianRational(make_rational(-1, 2), make_rational(3, 4))) ==
            "-1/2+3/4*i");
}
