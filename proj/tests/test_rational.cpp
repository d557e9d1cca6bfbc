#include "carleson/rational.hpp"
#include "doctest.h"

using carleson::parse_rat;
using carleson::pow2;
using carleson::Rat;
using carleson::rat_str;

TEST_CASE("parse fraction, integer and decimal forms") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("2/4") == Rat(1, 2));  // canonicalized
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("1.25") == Rat(5, 4));
    CHECK(parse_rat("0.85") == Rat(17, 20));
    CHECK(parse_rat("0.3") == Rat(3, 10));
    CHECK(parse_rat("-0.5") == Rat(-1, 2));
    CHECK(parse_rat("0") == Rat(0));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_rat(""), carleson::Error);
    CHECK_THROWS_AS(parse_rat("abc"), carleson::Error);
    CHECK_THROWS_AS(parse_rat("1/0"), carleson::Error);
    CHECK_THROWS_AS(parse_rat("1.2.3"), carleson::Error);
    CHECK_THROWS_AS(parse_rat("1/2/3"), carleson::Error);
    CHECK_THROWS_AS(parse_rat("1e3"), carleson::Error);
}

TEST_CASE("serialization is lowest-terms p/q") {
    CHECK(rat_str(Rat(7, 4)) == "7/4");
    CHECK(rat_str(Rat(2)) == "2/1");
    CHECK(rat_str(Rat(0)) == "0/1");
    Rat r(6, 4);
    r.canonicalize();
    CHECK(rat_str(r) == "3/2");
}

TEST_CASE("round trip through strings") {
    for (const char* s : {"7/4", "0/1", "123456789/987654321", "-5/3"}) {
        CHECK(rat_str(parse_rat(s)) == rat_str(parse_rat(rat_str(parse_rat(s)))));
    }
}

TEST_CASE("powers of two") {
    CHECK(pow2(0) == Rat(1));
    CHECK(pow2(3) == Rat(8));
    CHECK(pow2(-2) == Rat(1, 4));
    CHECK(pow2(-40) * pow2(40) == Rat(1));
}
