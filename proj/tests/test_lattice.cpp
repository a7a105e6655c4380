#include <doctest.h>

#include "helpers.hpp"
#include "scatlab/errors.hpp"
#include "scatlab/lattice.hpp"

using namespace scatlab;
using namespace scatlab::test;

namespace {

const LatticeVector m1{1, 0}, m2{-1, -3};

// sum over all walls on the ray of m of log-coefficients at the wall's own label monomial
Rational direct_coef(const ScatteringDiagram& d, LatticeVector m)
{
    return eval_at_one(scattering_coef(d, m));
}

} // namespace

TEST_CASE("Sublattice")
{
    Sublattice L(m1, m2);
    CHECK(L.index() == 3);
    CHECK(L.contains({0, -3}));
    CHECK(L.contains({1, 3}));
    CHECK_FALSE(L.contains({1, 1}));
    CHECK_FALSE(L.contains({0, -1}));
    auto [x, y] = L.coords({0, -3});
    CHECK(x == 1);
    CHECK(y == 1);
    CHECK(L.to_standard().apply_integral({0, -3}) == LatticeVector{1, 1});
    CHECK(L.to_standard() == RationalMatrix2{1, frac(-1, 3), 0, frac(-1, 3)});
    CHECK_THROWS_AS(Sublattice({1, 2}, {2, 4}), PreconditionError);
    CHECK(Sublattice::full().index() == 1);
}

TEST_CASE("nu")
{
    Sublattice L(m1, m2);
    CHECK(nu({1, 0}, L) == 3);
    CHECK(nu({0, -1}, L) == 1);
    CHECK(nu({0, -3}, L) == 1);
    CHECK(nu({-1, -3}, L) == 3);
    CHECK(nu({1, 0}, Sublattice::full()) == 1);
    CHECK_THROWS_AS(nu({0, 0}, L), PreconditionError);
    // depends on the ray only
    for (LatticeVector m : {LatticeVector{1, 0}, {2, -3}, {1, 3}, {-1, -6}})
        for (std::int64_t k = 1; k <= 4; ++k)
            CHECK(nu(k * m, L) == nu(m, L));
}

TEST_CASE("root_diagram")
{
    const int K = 5;
    Sublattice L(m1, m2);
    ScatteringDiagram cubed(K);
    cubed.add_wall({{1, 0}, true, TruncatedSeries::binomial_power(K, {1, 0}, 3)});
    ScatteringDiagram rooted = root_diagram(cubed, L);
    CHECK(rooted.walls()[0].label == one(K) + mono(K, 1, 1, 0));

    ScatteringDiagram plain = make_basic({{1, 0}, {0, 1}}, {2, 5}, K);
    CHECK(root_diagram(plain, Sublattice::full()) == plain);

    // D^{3,3} carried into M' is rooted to D^{1,1}_{m1,m2}
    ScatteringDiagram basic33 = pushforward(make_basic({{1, 0}, {0, 1}}, {3, 3}, K), L.from_standard());
    CHECK(root_diagram(basic33, L) == make_basic({m1, m2}, {1, 1}, K));
}

TEST_CASE("root of the completion is the completion of the root")
{
    const int K = 8;
    Sublattice L(m1, m2);
    ScatteringDiagram via_root = root_diagram(pushforward(standard_completion(3, 3, K), L.from_standard()), L);
    ScatteringDiagram direct = complete(make_basic({m1, m2}, {1, 1}, K));
    CHECK(via_root == direct);
    CHECK(is_consistent(via_root));
}

TEST_CASE("standard_completion cache serves smaller orders")
{
    ScatteringDiagram big = standard_completion(2, 2, 7);
    ScatteringDiagram small = standard_completion(2, 2, 4);
    CHECK(small.order() == 4);
    CHECK(small == complete(make_basic({{1, 0}, {0, 1}}, {2, 2}, 4)));
    CHECK(big == standard_completion(2, 2, 7));
}

TEST_CASE("reduce_basic")
{
    const int K = 6;
    CHECK(reduce_basic(m1, m2, 1, 1, m1, K) == one(K) + TruncatedSeries::monomial(K, 1, m1));
    CHECK(reduce_basic({1, 0}, {0, 1}, 1, 1, {1, 1}, K) == one(K) + mono(K, 2, 1, 1));
    CHECK_THROWS_AS(reduce_basic(m1, m2, 1, 1, {0, 1}, K), PreconditionError);
    CHECK_THROWS_AS(reduce_basic(m1, m2, 1, 1, {0, 0}, K), PreconditionError);

    ScatteringDiagram direct = complete(make_basic({m1, m2}, {1, 1}, K));
    for (LatticeVector m : {LatticeVector{0, -1}, {1, -3}, {1, -2}, {2, -3}}) {
        CAPTURE(to_string(m));
        CHECK(reduce_basic(m1, m2, 1, 1, m, K) == ray_function(direct, m));
    }
}

TEST_CASE("coef_via_reduction")
{
    CHECK(coef_via_reduction(m1, m2, 1, 1, {1, 0}, 4) == TPoly{{1, 1}});
    CHECK(coef_via_reduction(m1, m2, 1, 1, {1, 1}, 4).empty());
    CHECK(coef_via_reduction(m1, m2, 1, 1, {0, 1}, 4).empty());
}

TEST_CASE("coefficient formula agrees with direct completion")
{
    // every lattice point a m1 + b m2 with a + b <= K, against the completion in the original lattice
    struct Case {
        LatticeVector u, v;
        int l1, l2;
    };
    const int K = 7;
    for (Case c : {Case{m1, m2, 1, 1}, Case{{-1, -2}, {1, 0}, 1, 2}, Case{{-1, -1}, {1, 0}, 2, 3},
                   Case{{1, 0}, {0, 1}, 1, 5}, Case{{2, 1}, {-1, 1}, 1, 1}}) {
        ScatteringDiagram direct = complete(make_basic({c.u, c.v}, {c.l1, c.l2}, K));
        for (std::int64_t a = 0; a <= K; ++a) {
            for (std::int64_t b = 0; a + b <= K; ++b) {
                if (a + b == 0)
                    continue;
                LatticeVector m = a * c.u + b * c.v;
                CAPTURE(to_string(m));
                CHECK(eval_at_one(coef_via_reduction(c.u, c.v, c.l1, c.l2, m, K)) == direct_coef(direct, m));
            }
        }
    }
}
