#pragma once

#include <random>

#include "scatlab/series.hpp"

namespace scatlab::test {

// c * t^k * x^a * y^b
inline TruncatedSeries mono(int K, int k, std::int64_t a, std::int64_t b, const Rational& c = 1)
{
    return TruncatedSeries::monomial(K, k, {a, b}, c);
}

inline TruncatedSeries one(int K)
{
    return TruncatedSeries::one(K);
}

// Small random series; with unit = true the constant term is exactly 1.
inline TruncatedSeries random_series(std::mt19937& rng, int K, bool unit, int terms = 5)
{
    std::uniform_int_distribution<int> kd(unit ? 1 : 0, K), ad(-2, 2), cd(-4, 4), dd(1, 3);
    TruncatedSeries f = unit ? one(K) : TruncatedSeries(K);
    for (int i = 0; i < terms; ++i)
        f.add_term(kd(rng), {ad(rng), ad(rng)}, frac(cd(rng), dd(rng)));
    return f;
}

// Term-by-term product, kept independent of the graded multiplication in the library.
inline TruncatedSeries naive_mul(const TruncatedSeries& f, const TruncatedSeries& g)
{
    TruncatedSeries r(f.order());
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms())
            r.add_term(u.k + v.k, u.m + v.m, cu * cv);
    return r;
}

} // namespace scatlab::test
