#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uhw/half_integer.hpp"
#include "uhw/parameter.hpp"

using namespace uhw;

namespace {

std::vector<HalfInteger> ints(std::initializer_list<long long> values) {
    std::vector<HalfInteger> out;
    for (long long v : values) out.push_back(HalfInteger(v));
    return out;
}

}  // namespace

TEST_CASE("half integer arithmetic is exact") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<std::int64_t> dist(-2000, 2000);
    for (int trial = 0; trial < 2000; ++trial) {
        HalfInteger a = HalfInteger::from_twice(dist(rng));
        HalfInteger b = HalfInteger::from_twice(dist(rng));
        CHECK((a + b) - b == a);
        CHECK(a - a == HalfInteger(0));
        CHECK(-(-a) == a);
        CHECK(a.abs() >= HalfInteger(0));
        // total order consistent with the doubled representation
        CHECK((a < b) == (a.twice() < b.twice()));
    }
    CHECK(half(7) + half(1) == HalfInteger(4));
    CHECK(HalfInteger(3) - half(1) == half(5));
}

TEST_CASE("parsing and formatting round trip") {
    for (const char* text : {"0", "3", "-3", "7/2", "-7/2", "1/2", "-1/2", "123", "-999"}) {
        HalfInteger value = HalfInteger::parse(text);
        CHECK(value.str() == text);
    }
    CHECK(HalfInteger::parse(" 5 ") == HalfInteger(5));
    CHECK_FALSE(HalfInteger::try_parse("4/2").has_value());
    CHECK_FALSE(HalfInteger::try_parse("1/3").has_value());
    CHECK_FALSE(HalfInteger::try_parse("x").has_value());
    CHECK_FALSE(HalfInteger::try_parse("").has_value());
    CHECK_FALSE(HalfInteger::try_parse("3.5").has_value());
    // coordinate cap
    CHECK_FALSE(HalfInteger::try_parse("600000").has_value());
    CHECK(HalfInteger::try_parse("500000").has_value());
    CHECK_THROWS_AS(HalfInteger::parse("nope"), ParseError);

    auto coords = parse_coordinates("9,4,3,3,2,1,1,0");
    CHECK(coords.size() == 8);
    CHECK(format_coordinates(coords) == "9,4,3,3,2,1,1,0");
    auto halves = parse_coordinates("13/2,9/2,-1/2");
    CHECK(halves[0] == half(13));
    CHECK(halves[2] == half(-1));
    CHECK_THROWS_AS(parse_coordinates("1,,2"), ParseError);
}

TEST_CASE("algebra construction rules") {
    CHECK(Algebra::su(2, 3).rank() == 5);
    CHECK(Algebra::so_star(4).rank() == 4);
    CHECK_THROWS_AS(Algebra::su(3, 2), InvalidArgument);
    CHECK_THROWS_AS(Algebra::su(0, 2), InvalidArgument);
    CHECK_THROWS_AS(Algebra::so_star(1), InvalidArgument);
    CHECK(Algebra::su(2, 3).str() == "su(2,3)");
    CHECK(Algebra::so_star(4).str() == "so*(8)");
}

TEST_CASE("rho in standard coordinates") {
    CHECK(rho(Algebra::su(2, 3)).coords == ints({2, 1, 0, -1, -2}));
    CHECK(rho(Algebra::so_star(4)).coords == ints({3, 2, 1, 0}));
    CHECK(rho(Algebra::so_star(2)).coords == ints({1, 0}));
    CHECK(rho(Algebra::su(1, 1)).coords == std::vector<HalfInteger>{half(1), half(-1)});

    // coordinate sums: 0 for su, n(n-1)/2 for so*
    for (int p = 1; p <= 4; ++p) {
        for (int q = p; q <= 5; ++q) {
            HalfInteger sum(0);
            for (HalfInteger c : rho(Algebra::su(p, q)).coords) sum += c;
            CHECK(sum == HalfInteger(0));
        }
    }
    for (int n = 2; n <= 8; ++n) {
        HalfInteger sum(0);
        for (HalfInteger c : rho(Algebra::so_star(n)).coords) sum += c;
        CHECK(sum == HalfInteger(n * (n - 1) / 2));
    }
}

TEST_CASE("parameter and highest weight conversions") {
    Algebra su23 = Algebra::su(2, 3);
    Parameter zero(su23, ints({0, 0, 0, 0, 0}));
    CHECK(to_parameter(zero).coords == rho(su23).coords);

    Algebra so4 = Algebra::so_star(4);
    CHECK(from_parameter(rho(so4)).coords == ints({0, 0, 0, 0}));
    Parameter lam(so4, ints({-3, -3, -3, -3}));
    CHECK(to_parameter(lam).coords == ints({0, -1, -2, -3}));

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<HalfInteger> coords;
        for (int i = 0; i < 4; ++i) coords.push_back(HalfInteger::from_twice(2 * dist(rng)));
        Parameter x(so4, coords);
        CHECK(from_parameter(to_parameter(x)) == x);
        CHECK(to_parameter(from_parameter(x)) == x);
    }

    CHECK_THROWS_AS(Parameter(su23, ints({1, 2, 3})), InvalidArgument);
}

TEST_CASE("integrality classes") {
    Algebra so4 = Algebra::so_star(4);
    CHECK(integrality_class(Parameter(so4, ints({3, 2, 1, 0}))) == IntegralityClass::Integer);

    Algebra so9 = Algebra::so_star(9);
    Parameter ex313(so9, {half(13), half(9), half(7), half(5), half(5), half(3), half(3), half(1),
                          half(-1)});
    CHECK(integrality_class(ex313) == IntegralityClass::HalfOdd);

    Algebra so2 = Algebra::so_star(2);
    CHECK_THROWS_AS(integrality_class(Parameter(so2, {HalfInteger(1), half(1)})),
                    NotIntegralError);

    // su accepts a uniform half-odd offset: only differences matter
    Algebra su11 = Algebra::su(1, 1);
    CHECK(integrality_class(Parameter(su11, {half(3), half(-1)})) == IntegralityClass::HalfOdd);
}
