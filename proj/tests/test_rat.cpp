#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconv/rat.hpp"

using namespace gconv;

TEST_CASE("canonical reduced form") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(-1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).num() == 2);
    CHECK(Rat(6, 3).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(3, 2) == Rat(2));
    CHECK(Rat(1, 2) - Rat(3, 2) == Rat(-1));
    CHECK(Rat(1, 2) * Rat(3, 2) == Rat(3, 4));
    CHECK(Rat(-1, 2) / Rat(3, 2) == Rat(-1, 3));
    CHECK(-Rat(1, 3) == Rat(-1, 3));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("comparisons cross-multiply") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 3) > Rat(-1, 2));
    CHECK(Rat(2, 6) <= Rat(1, 3));
    CHECK(min(Rat(1, 3), Rat(1, 2)) == Rat(1, 3));
    CHECK(max(Rat(-5), Rat(-7)) == Rat(-5));
}

TEST_CASE("floor and ceil") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(4).floor() == 4);
}

TEST_CASE("printing") {
    CHECK(Rat(3).str() == "3");
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat(3).wire() == "3/1");
}

TEST_CASE("128-bit intermediates survive large cross products") {
    Rat big(1000000007, 999999937);
    Rat sum = big + big;
    CHECK(sum == Rat(2) * big);
    // accumulating many terms with a common denominator stays reduced
    Rat acc(0);
    for (int i = 0; i < 100000; ++i) acc += Rat(1, 720720);
    CHECK(acc == Rat(100000, 720720));
}

TEST_CASE("extended reals order and negate") {
    ExtRat ninf = ExtRat::neg_inf(), pinf = ExtRat::pos_inf();
    CHECK(ninf < ExtRat(Rat(0)));
    CHECK(ExtRat(Rat(0)) < pinf);
    CHECK(ninf < pinf);
    CHECK(-ninf == pinf);
    CHECK(ninf + ExtRat(Rat(5)) == ninf);
    CHECK_THROWS_AS(ninf + pinf, std::domain_error);
    CHECK(ninf.str() == "-inf");
}
