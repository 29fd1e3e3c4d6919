#include "doctest.h"

#include "sspc/rational.hpp"

using namespace sspc;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-4/-6")) == "2/3");
    CHECK(to_string(parse_rational("3/-4")) == "-3/4");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(rat(0, 5)) == "0");
}

TEST_CASE("rational parse failures") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("sign_of") {
    CHECK(sign_of(rat(1, 7)) == 1);
    CHECK(sign_of(rat(-1, 7)) == -1);
    CHECK(sign_of(Rational(0)) == 0);
}

TEST_CASE("round trip through text") {
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "1000000000000/7"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
}
