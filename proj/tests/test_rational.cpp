#include "doctest.h"
#include "rulehide/errors.hpp"
#include "rulehide/rational.hpp"

using rulehide::NumberSyntaxError;
using rulehide::Rational;

TEST_CASE("rationals normalize to lowest terms") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(4, 6).num() == 2);
    CHECK(Rational(4, 6).den() == 3);
    CHECK(Rational(0, 5) == Rational(0, 1));
    CHECK(Rational(3, 3) == Rational(1, 1));
}

TEST_CASE("parsing accepts percent, decimal and fraction forms") {
    CHECK(Rational::parse("33%") == Rational(33, 100));
    CHECK(Rational::parse("0.33") == Rational(33, 100));
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("0.7") == Rational(7, 10));
    CHECK(Rational::parse("70%") == Rational(7, 10));
    CHECK(Rational::parse("66.5%") == Rational(133, 200));
    CHECK(Rational::parse("1") == Rational(1, 1));
    CHECK(Rational::parse("100%") == Rational(1, 1));
    CHECK(Rational::parse(" 1/2 ") == Rational(1, 2));
    CHECK(Rational::parse("2/6%") == Rational(1, 300));
}

TEST_CASE("parsing rejects garbage") {
    CHECK_THROWS_AS(Rational::parse(""), NumberSyntaxError);
    CHECK_THROWS_AS(Rational::parse("abc"), NumberSyntaxError);
    CHECK_THROWS_AS(Rational::parse("-1"), NumberSyntaxError);
    CHECK_THROWS_AS(Rational::parse("1/0"), NumberSyntaxError);
    CHECK_THROWS_AS(Rational::parse("%"), NumberSyntaxError);
    CHECK_THROWS_AS(Rational::parse("1..2"), NumberSyntaxError);
    CHECK_THROWS_AS(Rational::parse("."), NumberSyntaxError);
}

TEST_CASE("comparison is exact, not float-mediated") {
    // 2/6 = 0.3333... clears a 33% bar only under exact arithmetic.
    CHECK(Rational(2, 6) >= Rational(33, 100));
    CHECK(Rational(33, 100) < Rational(1, 3));
    CHECK(Rational(1, 3) > Rational(33, 100));
    CHECK(Rational(3, 4) >= Rational(7, 10));
    CHECK(Rational(2, 3) < Rational(7, 10));
    // Large cross-products stay exact.
    CHECK(Rational(1'000'000'000, 3'000'000'001) < Rational(1, 3));
}

TEST_CASE("percent rendering uses three decimals, half to even") {
    CHECK(Rational(2, 3).percent() == "66.667");
    CHECK(Rational(1, 3).percent() == "33.333");
    CHECK(Rational(1, 2).percent() == "50.000");
    CHECK(Rational(1, 1).percent() == "100.000");
    CHECK(Rational(3, 4).percent() == "75.000");
    CHECK(Rational(0, 1).percent() == "0.000");
    // Exact halves at the third decimal round to the even neighbour.
    CHECK(Rational(1, 1600).percent() == "0.062");
    CHECK(Rational(3, 1600).percent() == "0.188");
}

TEST_CASE("to_string renders the reduced fraction") {
    CHECK(Rational(4, 6).to_string() == "2/3");
    CHECK(Rational(4, 4).to_string() == "1/1");
    CHECK(Rational(0, 7).to_string() == "0/1");
}
