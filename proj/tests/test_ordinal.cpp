#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algame/errors.hpp"
#include "algame/ordinal.hpp"

using namespace algame;

TEST_CASE("mex of small sets") {
    CHECK(mex({Ordinal::finite(1), Ordinal::finite(3)}) == Ordinal::finite(0));
    CHECK(mex({}) == Ordinal::finite(0));
    CHECK(mex({Ordinal::finite(0), Ordinal::finite(2)}) == Ordinal::finite(1));
    CHECK(mex({Ordinal::finite(0), Ordinal::finite(1), Ordinal::finite(2)}) == Ordinal::finite(3));
    CHECK(mex({Ordinal::omega()}) == Ordinal::finite(0));
    CHECK(mex({Ordinal::finite(0), Ordinal::omega()}) == Ordinal::finite(1));
}

TEST_CASE("mex characterization on random sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Ordinal> values;
        int size = static_cast<int>(rng() % 12);
        for (int i = 0; i < size; ++i)
            values.push_back(Ordinal(rng() % 2, rng() % 10));
        Ordinal m = mex(values);
        CHECK(m.is_finite());
        for (const Ordinal& v : values) CHECK(v != m);
        // Every finite ordinal below the mex appears.
        for (bigint b = 0; b < m.finite_part(); ++b)
            CHECK(std::count(values.begin(), values.end(), Ordinal::finite(b)) > 0);
    }
}

TEST_CASE("natural sum") {
    CHECK(natural_sum(Ordinal(), Ordinal()) == Ordinal());
    CHECK(natural_sum(Ordinal::finite(2), Ordinal::finite(3)) == Ordinal::finite(5));
    CHECK(natural_sum(Ordinal(1, 1), Ordinal(1, 2)) == Ordinal(2, 3));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Ordinal x(rng() % 5, rng() % 50), y(rng() % 5, rng() % 50), z(rng() % 5, rng() % 50);
        CHECK(natural_sum(x, y) == natural_sum(y, x));
        CHECK(natural_sum(natural_sum(x, y), z) == natural_sum(x, natural_sum(y, z)));
        CHECK(natural_sum(x, Ordinal()) == x);
        if (y < z) CHECK(natural_sum(x, y) < natural_sum(x, z)); // strict monotonicity
    }
}

TEST_CASE("render conventions") {
    CHECK(render(Ordinal(0, 5)) == "5");
    CHECK(render(Ordinal(1, 0)) == "w");
    CHECK(render(Ordinal(1, 2)) == "w+2");
    CHECK(render(Ordinal(2, 3)) == "w*2+3");
    CHECK(render(Ordinal()) == "0");
}

TEST_CASE("parse round trip") {
    CHECK(parse_ordinal("0") == Ordinal());
    CHECK(parse_ordinal("w") == Ordinal::omega());
    CHECK(parse_ordinal("w*3") == Ordinal(3, 0));
    CHECK(parse_ordinal("w+17") == Ordinal(1, 17));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        Ordinal x(rng() % 1000001, rng() % 1000001);
        CHECK(parse_ordinal(render(x)) == x);
    }

    CHECK_THROWS_AS(parse_ordinal(""), parse_error);
    CHECK_THROWS_AS(parse_ordinal("w+"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("5x"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("omega"), parse_error);
}

TEST_CASE("ordering") {
    CHECK(Ordinal::finite(3) < Ordinal::omega());
    CHECK(Ordinal::omega() < Ordinal(1, 1));
    CHECK(Ordinal(1, 5) < Ordinal(2, 0));
    CHECK(Ordinal::finite(2) < Ordinal::finite(10));
}
