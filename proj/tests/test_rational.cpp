#include <catch2/catch_amalgamated.hpp>

#include "ghost/rational.hpp"

using ghost::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(-2, 4).den() == 2);
    CHECK(Rational(-2, 4).num() == -1);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-5, 2) < Rational(-2));
}

TEST_CASE("integrality accessors") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::logic_error);
}

TEST_CASE("floor and ceil round toward the correct side") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
    CHECK(Rational(-1, 2).floor() == -1);
    CHECK(Rational(-1, 2).ceil() == 0);
}

TEST_CASE("sign and text") {
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(3, 7).str() == "3/7");
    CHECK(Rational(-3, 7).str() == "-3/7");
    CHECK(Rational(4).str() == "4");
}
