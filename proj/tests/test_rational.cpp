#include <doctest.h>

#include "equicut/rational.hpp"

using namespace equicut;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(to_string(a + b) == "1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(Rational(-2, 4) == Rational(-1, 2));
}

TEST_CASE("rational serialization round-trips") {
    for (const char* s : {"0", "1", "-1", "1/2", "-7/3", "22/7", "123456789123456789/2"}) {
        Rational q = parse_rational(s);
        CHECK(to_string(q) == s);
        CHECK(parse_rational(to_string(q)) == q);
    }
    CHECK_THROWS_AS(parse_rational("1/0x"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("floor and ceil of rationals") {
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(ceil_int(Rational(7, 2)) == 4);
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(ceil_int(Rational(-7, 2)) == -3);
    CHECK(floor_int(Rational(6, 2)) == 3);
    CHECK(ceil_int(Rational(6, 2)) == 3);
    CHECK(is_integer(Rational(6, 2)));
    CHECK_FALSE(is_integer(Rational(7, 2)));
}
