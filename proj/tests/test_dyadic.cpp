#include <doctest.h>

#include <unordered_set>

#include "levy/dyadic.hpp"

using namespace levy;

TEST_CASE("dyadic canonical form") {
    CHECK(Dyadic(4, 2) == Dyadic::from_int(1));
    CHECK(Dyadic(6, 1) == Dyadic::from_int(3));
    CHECK(Dyadic(0, 7) == Dyadic());
    CHECK(Dyadic(1, 1).num() == 1);
    CHECK(Dyadic(1, 1).exp() == 1);
    CHECK(Dyadic(-8, 3) == Dyadic::from_int(-1));
}

TEST_CASE("dyadic arithmetic is exact") {
    const Dyadic half(1, 1);
    const Dyadic quarter(1, 2);
    CHECK(half + quarter == Dyadic(3, 2));
    CHECK(half - quarter == quarter);
    CHECK(half * half == quarter);
    CHECK((half + half) == Dyadic::from_int(1));
    CHECK(quarter.half() == Dyadic(1, 3));
    CHECK(-half == Dyadic(-1, 1));
    CHECK(Dyadic(3, 2) * Dyadic(-5, 1) == Dyadic(-15, 3));
}

TEST_CASE("dyadic ordering") {
    CHECK(Dyadic(1, 2) < Dyadic(1, 1));
    CHECK(Dyadic(-1, 1) < Dyadic(1, 2));
    CHECK(Dyadic(3, 1) > Dyadic::from_int(1));
    CHECK(Dyadic(5, 3) <= Dyadic(5, 3));
    CHECK(Dyadic(5, 3).sign() == 1);
    CHECK(Dyadic(-5, 3).sign() == -1);
    CHECK(Dyadic().sign() == 0);
}

TEST_CASE("dyadic decimal strings are exact and canonical") {
    CHECK(Dyadic(1, 1).to_decimal_string() == "0.5");
    CHECK(Dyadic(-3, 2).to_decimal_string() == "-0.75");
    CHECK(Dyadic(7, 0).to_decimal_string() == "7");
    CHECK(Dyadic(0, 0).to_decimal_string() == "0");
    CHECK(Dyadic(1, 10).to_decimal_string() == "0.0009765625");
    CHECK(Dyadic(1, 1).to_double() == 0.5);
}

TEST_CASE("midpoint and cross products") {
    const DyadicPoint a{Dyadic::from_int(0), Dyadic::from_int(0)};
    const DyadicPoint b{Dyadic::from_int(1), Dyadic::from_int(0)};
    CHECK(midpoint(a, b) == DyadicPoint{Dyadic(1, 1), Dyadic()});
    CHECK(cross({Dyadic::from_int(1), Dyadic()}, {Dyadic(), Dyadic::from_int(1)}) ==
          Dyadic::from_int(1));
    CHECK(squared_distance(a, b) == Dyadic::from_int(1));
}

TEST_CASE("equal values hash equally") {
    DyadicPointHash h;
    CHECK(h({Dyadic(2, 2), Dyadic(4, 3)}) == h({Dyadic(1, 1), Dyadic(1, 1)}));
}
