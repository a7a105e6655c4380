#include "scatlab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "scatlab/embed.hpp"
#include "scatlab/errors.hpp"

namespace scatlab {

namespace {

Delta half_difference(const Integer& a, const Integer& b)
{
    Rational v(a - b, 2);
    v.canonicalize();
    return {v, v.get_den() != 1};
}

Integer I(std::int64_t x)
{
    return Integer(static_cast<long>(x));
}

} // namespace

Delta delta(std::int64_t d, std::int64_t p, std::int64_t q)
{
    return half_difference(I(d - 1) * I(d - 2), I(p - 1) * I(q - 1));
}

Delta delta_minus(std::int64_t d, std::int64_t p, std::int64_t q)
{
    return half_difference(I(d - 2) * I(d - 3), I(p - 1) * I(q - 1));
}

DminResult d_min_certified(std::int64_t p, std::int64_t q)
{
    if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
        throw PreconditionError("d_min needs coprime positive p, q");
    if ((p + q) % 3 != 0)
        throw PreconditionError("d_min needs p + q divisible by 3");
    if (!exists_wp_curve(model(Surface::CP2), p, q).exists)
        throw PreconditionError("no well-placed (p,q) curve in CP2 for (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
    DminResult r;
    r.value = (p + q) / 3;
    r.delta = delta(r.value, p, q).value;
    // degree d-1 ruled out by adjunction, or the delta <= 4 clause
    r.certified = delta_minus(r.value, p, q).value < 0 || r.delta <= 4;
    return r;
}

bool theoremB_exists(std::int64_t p, std::int64_t q)
{
    if (std::gcd(p, q) != 1)
        throw PreconditionError("theoremB_exists needs coprime p, q");
    if (!(p > q && q > 1))
        throw PreconditionError("theoremB_exists needs p > q > 1");
    if ((p + q) % 3 != 0)
        throw PreconditionError("theoremB_exists needs p + q divisible by 3");
    for (int k = 3;; k += 2) {
        Integer fq = fib(k);
        if (fq > q)
            break;
        if (fq == q && fib(k + 4) == p)
            return true;
    }
    return 2 * p > 7 * q && quad_form(7, p, q) > 0;
}

Rational S_map(int K, const Rational& x)
{
    if (x <= 1)
        throw PreconditionError("S_map needs x > 1");
    return Rational(K) - 1 / x;
}

Rational R_map(int K, const Rational& x)
{
    if (x <= K)
        throw PreconditionError("R_map needs x > K");
    return Rational(K) + 1 / (x - K);
}

std::vector<Rational> S_orbit(int K, const Rational& x, int steps)
{
    std::vector<Rational> out{x};
    for (int i = 0; i < steps; ++i)
        out.push_back(S_map(K, out.back()));
    return out;
}

Pair phi_case(int K, std::int64_t p, std::int64_t q, int which)
{
    if (which == 1)
        return {p, K * p - q};
    std::int64_t x = q - K * p;
    return {x, p + K * x};
}

Pair psi_case(int K, std::int64_t p, std::int64_t q, int which)
{
    if (which == 1) {
        std::int64_t y = p - K * q;
        return {q + K * y, y};
    }
    return {K * q - p, q};
}

Pair phi_branch(int K, std::int64_t p, std::int64_t q)
{
    if (p < 0 || q < 0 || (p == 0 && q == 0))
        throw PreconditionError("phi_branch needs nonnegative (p,q) != 0");
    return phi_case(K, p, q, static_cast<std::int64_t>(K) * p > q ? 1 : 2);
}

Pair psi_branch(int K, std::int64_t p, std::int64_t q)
{
    if (p < 0 || q < 0 || (p == 0 && q == 0))
        throw PreconditionError("psi_branch needs nonnegative (p,q) != 0");
    return psi_case(K, p, q, p > static_cast<std::int64_t>(K) * q ? 1 : 2);
}

Pair mutate(int K, std::int64_t p, std::int64_t q)
{
    return {q, K * q - p};
}

Integer quad_form(int K, std::int64_t p, std::int64_t q)
{
    return I(p) * I(p) - Integer(K) * I(p) * I(q) + I(q) * I(q);
}

bool light_cone_ok(int K, std::int64_t p, std::int64_t q, std::int64_t delta)
{
    return quad_form(K, p, q) + Integer(K + 2) * (1 - 2 * I(delta)) >= 0;
}

SeedResult seed_reduce(int K, std::int64_t p, std::int64_t q, std::int64_t delta, int max_steps)
{
    if (K < 3 || K > 7)
        throw PreconditionError("seed_reduce needs 3 <= K <= 7");
    if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
        throw PreconditionError("seed_reduce needs coprime positive p, q");
    if (delta < 0)
        throw PreconditionError("seed_reduce needs delta >= 0");
    if (K == 7 && (p + q) % 3 != 0)
        throw PreconditionError("CP2 data must have p + q divisible by 3");
    if (p < q)
        std::swap(p, q);
    SeedResult r;
    for (;;) {
        std::int64_t next = K * q - p;
        if (next < 1 || next > q)
            break;
        std::tie(p, q) = Pair{q, next};
        if (++r.steps > max_steps)
            throw ConsistencyError("seed_reduce did not terminate within " + std::to_string(max_steps) + " steps");
    }
    r.p0 = p;
    r.q0 = q;
    r.is_seed = delta == 0 && (q == 1 || (q == 2 && K == 3));
    return r;
}

namespace {

// Is there a class with c1 = c and self-intersection s on the given surface?
bool has_class(Surface s, std::int64_t c, std::int64_t self)
{
    if (s == Surface::CP2)
        return c % 3 == 0 && (c / 3) * (c / 3) == self;
    if (s == Surface::CP1xCP1) {
        for (std::int64_t a = 0; 2 * a <= c; ++a) {
            if ((c - 2 * a) % 2 != 0)
                continue;
            std::int64_t b = (c - 2 * a) / 2;
            if (2 * a * b == self)
                return true;
        }
        return false;
    }
    int j = s == Surface::Bl1 ? 1 : s == Surface::Bl2 ? 2 : s == Surface::Bl3 ? 3 : 4;
    for (std::int64_t d = 0; d <= 3 * c + 6; ++d) {
        std::int64_t sum = 3 * d - c;
        if (sum < 0)
            continue;
        // a_1 >= ... >= a_j >= 0 with sum a_i = sum, sum a_i^2 = d^2 - self
        std::int64_t target = d * d - self;
        std::function<bool(int, std::int64_t, std::int64_t, std::int64_t)> rec =
            [&](int left, std::int64_t rest, std::int64_t sq, std::int64_t cap) {
                if (left == 0)
                    return rest == 0 && sq == 0;
                for (std::int64_t a = std::min(cap, rest); a >= 0; --a)
                    if (a * a <= sq && rec(left - 1, rest - a, sq - a * a, a))
                        return true;
                return false;
            };
        if (target >= 0 && rec(j, sum, target, sum))
            return true;
    }
    return false;
}

} // namespace

std::vector<Pair> seed_pairs(Surface s)
{
    const ToricModel& X = model(s);
    QuadraticNumber acc = a_acc(X.K);
    std::vector<Pair> out;
    for (std::int64_t q0 : {std::int64_t{1}, std::int64_t{2}}) {
        if (q0 == 2 && X.K != 3)
            continue;
        for (std::int64_t p0 = q0; acc.compare(frac(p0, q0)) < 0; ++p0) {
            if (std::gcd(p0, q0) != 1 || (p0 == X.K - 1 && q0 == 1))
                continue;
            std::int64_t next = X.K * q0 - p0;
            if (next >= 1 && next <= q0 && !(p0 == 1 && q0 == 1))
                continue;
            if (has_class(s, p0 + q0, p0 * q0 - 1))
                out.push_back({p0, q0});
        }
    }
    return out;
}

} // namespace scatlab
