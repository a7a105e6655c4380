#include <doctest.h>

#include "helpers.hpp"
#include "scatlab/errors.hpp"
#include "scatlab/io.hpp"

using namespace scatlab;
using namespace scatlab::test;

TEST_CASE("rationals print as num/den and parse back")
{
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(frac(4, -6)) == "-2/3");
    CHECK(parse_rational("8/1") == 8);
    CHECK(parse_rational("-12/8") == frac(-3, 2));
    CHECK(parse_rational("+5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("/3"), PreconditionError);
}

TEST_CASE("lattice vector helpers")
{
    CHECK(gcd(LatticeVector{4, -6}) == 2);
    CHECK(primitive_part({-3, 9}) == LatticeVector{-1, 3});
    CHECK(is_primitive({2, 3}));
    CHECK_FALSE(is_primitive({0, 0}));
    CHECK_THROWS_AS(gcd(LatticeVector{0, 0}), PreconditionError);
    CHECK(ccw_normal({1, 1}) == LatticeVector{-1, 1});
    CHECK(angle_less({1, 0}, {1, 1}));
    CHECK(angle_less({0, 1}, {-1, 0}));
    CHECK(angle_less({-1, 0}, {0, -1}));
    CHECK(angle_less({0, -1}, {1, -1}));
    CHECK_FALSE(angle_less({1, -1}, {1, 0}));
}

TEST_CASE("add")
{
    const int K = 3;
    TruncatedSeries f = one(K) + mono(K, 1, 1, 0);
    CHECK(f + mono(K, 0, 0, 0, -1) == mono(K, 1, 1, 0));
    CHECK(f + TruncatedSeries(K) == f);
    CHECK(mono(K, 1, 1, 0) + mono(K, 1, 1, 0) == mono(K, 1, 1, 0, 2));
    CHECK_THROWS_AS(add(f, TruncatedSeries(K + 1)), PreconditionError);
}

TEST_CASE("mul")
{
    const int K = 4;
    TruncatedSeries x1 = one(K) + mono(K, 1, 1, 0), y1 = one(K) + mono(K, 1, 0, 1);
    CHECK(x1 * y1 == one(K) + mono(K, 1, 1, 0) + mono(K, 1, 0, 1) + mono(K, 2, 1, 1));
    TruncatedSeries x2 = one(2) + mono(2, 1, 1, 0);
    CHECK(x2 * x2 * x2 == one(2) + mono(2, 1, 1, 0, 3) + mono(2, 2, 2, 0, 3));
    CHECK(x1 * one(K) == x1);
}

TEST_CASE("int_pow")
{
    TruncatedSeries f = one(3) + mono(3, 1, 1, 0);
    CHECK(int_pow(f, -1) == one(3) - mono(3, 1, 1, 0) + mono(3, 2, 2, 0) - mono(3, 3, 3, 0));
    CHECK(int_pow(f, 0) == one(3));
    CHECK(int_pow(f, 2) == one(3) + mono(3, 1, 1, 0, 2) + mono(3, 2, 2, 0));
    CHECK(int_pow(f, 5) == TruncatedSeries::binomial_power(3, {1, 0}, 5));
    CHECK_THROWS_AS(int_pow(mono(3, 0, 1, 0, 2), -1), PreconditionError);
}

TEST_CASE("log and exp")
{
    TruncatedSeries f = one(3) + mono(3, 1, 1, 0);
    CHECK(log(f) == mono(3, 1, 1, 0) - mono(3, 2, 2, 0, frac(1, 2)) + mono(3, 3, 3, 0, frac(1, 3)));
    TruncatedSeries g = int_pow(one(4) + mono(4, 1, 1, 0), 2) * (one(4) + mono(4, 2, 2, 0));
    CHECK(exp(log(g)) == g);
    CHECK(log(one(5)).is_zero());
    CHECK(exp(TruncatedSeries(5)) == one(5));
    CHECK_THROWS_AS(log(mono(3, 0, 0, 0, 2)), PreconditionError);
    CHECK_THROWS_AS(exp(mono(3, 0, 1, 0)), PreconditionError);
}

TEST_CASE("nth_root")
{
    TruncatedSeries f = one(6) + mono(6, 1, 1, 0);
    CHECK(nth_root(int_pow(f, 3), 3) == f);
    CHECK(nth_root(one(6), 5) == one(6));
    TruncatedSeries g = one(6) + mono(6, 2, 1, 1);
    CHECK(nth_root(g * g, 2) == g);
    CHECK_THROWS_AS(nth_root(f, 0), PreconditionError);
}

TEST_CASE("substitute")
{
    const int K = 3;
    TruncatedSeries f = one(K) + mono(K, 1, 1, 0);
    CHECK(substitute(f, IntMatrix2{0, 1, 1, 0}) == one(K) + mono(K, 1, 0, 1));
    CHECK(substitute(f, IntMatrix2::from_columns({1, 3}, {0, 1})) == one(K) + mono(K, 1, 1, 3));
    CHECK(substitute(f, IntMatrix2{}) == f);
    CHECK_THROWS_AS(substitute(f, IntMatrix2{1, 2, 2, 4}), PreconditionError);
    RationalMatrix2 third{frac(1, 3), 0, 0, 1};
    CHECK(substitute(one(K) + mono(K, 1, 3, 1), third) == one(K) + mono(K, 1, 1, 1));
    CHECK_THROWS_AS(substitute(f, third), PreconditionError);
}

TEST_CASE("coefficient")
{
    TruncatedSeries f = log(TruncatedSeries::binomial_power(4, {1, 0}, 3));
    TPoly c = coefficient(f, {1, 0});
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == 1);
    CHECK(c[0].second == 3);
    TPoly d = coefficient(one(3) + mono(3, 2, 1, 1), {1, 1});
    REQUIRE(d.size() == 1);
    CHECK(d[0] == std::pair<int, Rational>{2, 1});
    CHECK(coefficient(f, {5, 5}).empty());
}

TEST_CASE("truncation drops high terms and keeps zero coefficients out")
{
    TruncatedSeries f(2);
    f.add_term(3, {1, 0}, 1);
    f.add_term(1, {1, 0}, 2);
    f.add_term(1, {1, 0}, -2);
    CHECK(f.is_zero());
    TruncatedSeries g = one(5) + mono(5, 4, 1, 0);
    CHECK(g.truncated(3) == one(3));
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int K = 2 + trial % 4;
        TruncatedSeries f = random_series(rng, K, false), g = random_series(rng, K, false),
                        h = random_series(rng, K, false);
        CAPTURE(trial);
        CHECK(f * g == naive_mul(f, g));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f - f == TruncatedSeries(K));
    }
}

TEST_CASE("exp and log are inverse on random series")
{
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const int K = 2 + trial % 4;
        TruncatedSeries u = random_series(rng, K, true);
        TruncatedSeries z = sub(random_series(rng, K, true), one(K));
        CAPTURE(trial);
        CHECK(exp(log(u)) == u);
        CHECK(log(exp(z)) == z);
        CHECK(log(u * exp(z)) == log(u) + z);
    }
}

TEST_CASE("nth_root raised back to n on random series")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const int K = 2 + trial % 3;
        const int n = 2 + trial % 4;
        TruncatedSeries u = random_series(rng, K, true);
        CAPTURE(trial);
        CHECK(int_pow(nth_root(u, n), n) == u);
        CHECK(int_pow(u, -n) * int_pow(u, n) == one(K));
    }
}

TEST_CASE("substitute is a ring homomorphism")
{
    std::mt19937 rng(99);
    const IntMatrix2 maps[] = {{0, 1, 1, 0}, {1, -1, 2, -1}, {2, 1, 1, 1}, {-1, 0, 2, -1}};
    for (int trial = 0; trial < 40; ++trial) {
        const int K = 2 + trial % 3;
        const IntMatrix2& phi = maps[trial % 4];
        TruncatedSeries f = random_series(rng, K, false), g = random_series(rng, K, false);
        CAPTURE(trial);
        CHECK(substitute(f * g, phi) == substitute(f, phi) * substitute(g, phi));
        CHECK(substitute(f + g, phi) == substitute(f, phi) + substitute(g, phi));
    }
}

TEST_CASE("series JSON")
{
    TruncatedSeries f = one(4) + mono(4, 1, 1, 0, frac(-1, 2)) + mono(4, 2, -1, 3, 7);
    std::string text = series_to_json(f);
    CHECK(text == R"([{"m":[0,0],"t":0,"c":"1/1"},{"m":[1,0],"t":1,"c":"-1/2"},{"m":[-1,3],"t":2,"c":"7/1"}])");
    CHECK(series_from_json(text, 4) == f);
    CHECK_THROWS_AS(series_from_json("[{\"m\":[1],\"t\":0,\"c\":\"1\"}]", 4), PreconditionError);
    CHECK_THROWS_AS(series_from_json("not json", 4), PreconditionError);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries g = random_series(rng, 4, false, 8);
        CHECK(series_from_json(series_to_json(g), 4) == g);
    }
}
