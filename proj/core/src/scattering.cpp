#include "scatlab/scattering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scatlab/errors.hpp"

namespace scatlab {

namespace {

// kappa with m = kappa * d, or 0 if m is not a positive multiple of d.
std::int64_t multiple_of(LatticeVector m, LatticeVector d)
{
    if (det(m, d) != 0)
        return 0;
    std::int64_t kappa = d.a != 0 ? m.a / d.a : m.b / d.b;
    return kappa > 0 && kappa * d == m ? kappa : 0;
}

bool wall_less(const Wall& u, const Wall& v)
{
    LatticeVector ru = u.ray(), rv = v.ray();
    if (ru != rv)
        return angle_less(ru, rv);
    return u.incoming < v.incoming;
}

} // namespace

void validate_wall(const Wall& w)
{
    if (!is_primitive(w.direction))
        throw PreconditionError("wall direction " + to_string(w.direction) + " is not primitive");
    if (!w.label.is_unit())
        throw PreconditionError("wall label must have constant term 1");
    for (const auto& [key, c] : w.label.terms()) {
        if (key.k == 0)
            continue;
        if (multiple_of(key.m, w.direction) == 0)
            throw PreconditionError("label monomial " + to_string(key.m) + " is not a positive multiple of " +
                                    to_string(w.direction));
    }
}

void ScatteringDiagram::add_wall(Wall w)
{
    validate_wall(w);
    if (w.label.order() != order_)
        w.label = w.label.with_order(order_);
    walls_.push_back(std::move(w));
}

std::vector<Wall> ScatteringDiagram::sorted_walls() const
{
    std::vector<Wall> out = walls_;
    std::stable_sort(out.begin(), out.end(), wall_less);
    return out;
}

ScatteringDiagram ScatteringDiagram::normalized() const
{
    ScatteringDiagram out(order_);
    for (const Wall& w : sorted_walls()) {
        if (!out.walls_.empty() && out.walls_.back().direction == w.direction &&
            out.walls_.back().incoming == w.incoming)
            out.walls_.back().label = mul(out.walls_.back().label, w.label);
        else
            out.walls_.push_back(w);
    }
    std::erase_if(out.walls_, [](const Wall& w) { return w.label.is_one(); });
    return out;
}

ScatteringDiagram ScatteringDiagram::truncated(int order) const
{
    ScatteringDiagram out(order);
    for (const Wall& w : walls_) {
        Wall t{w.direction, w.incoming, w.label.truncated(order)};
        if (!t.label.is_one())
            out.walls_.push_back(std::move(t));
    }
    return out;
}

bool operator==(const ScatteringDiagram& a, const ScatteringDiagram& b)
{
    return a.order_ == b.order_ && a.normalized().walls_ == b.normalized().walls_;
}

ScatteringDiagram make_basic(const std::vector<LatticeVector>& directions, const std::vector<int>& multiplicities,
                             int order)
{
    if (directions.size() != multiplicities.size())
        throw PreconditionError("directions and multiplicities differ in length");
    std::set<LatticeVector> seen;
    ScatteringDiagram d(order);
    for (std::size_t i = 0; i < directions.size(); ++i) {
        LatticeVector m = directions[i];
        if (!is_primitive(m))
            throw PreconditionError("direction " + to_string(m) + " is not primitive");
        if (!seen.insert(m).second)
            throw PreconditionError("duplicate direction " + to_string(m));
        if (multiplicities[i] <= 0)
            throw PreconditionError("multiplicities must be positive");
        d.add_wall({m, true, TruncatedSeries::binomial_power(order, m, multiplicities[i])});
    }
    return d;
}

TruncatedSeries cross_wall(const TruncatedSeries& f, const Wall& w, int side)
{
    if (side != 1 && side != -1)
        throw PreconditionError("side must be +1 or -1");
    const int K = f.order();
    TruncatedSeries label = w.label.with_order(K);
    LatticeVector n = static_cast<std::int64_t>(side) * ccw_normal(w.ray());
    std::map<std::int64_t, TruncatedSeries> powers;
    TruncatedSeries out(K);
    for (const auto& [key, c] : f.terms()) {
        std::int64_t e = pairing(n, key.m);
        auto it = powers.find(e);
        if (it == powers.end())
            it = powers.emplace(e, int_pow(label, e)).first;
        for (const auto& [lk, lc] : it->second.terms())
            out.add_term(key.k + lk.k, key.m + lk.m, c * lc);
    }
    return out;
}

bool Automorphism::is_identity() const
{
    const int K = x.order();
    return x == TruncatedSeries::monomial(K, 0, {1, 0}) && y == TruncatedSeries::monomial(K, 0, {0, 1});
}

namespace {

// theta <- theta o theta_w for walls taken from the largest angle down, so that the
// result is theta_N o ... o theta_1 with theta_1 the first wall counterclockwise.
MonodromyLogs monodromy_logs(const std::vector<Wall>& sorted, int K)
{
    MonodromyLogs r{TruncatedSeries(K), TruncatedSeries(K)};
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        const Wall& w = *it;
        TruncatedSeries L = log(w.label.truncated(K));
        if (L.is_zero())
            continue;
        LatticeVector d = w.direction;
        LatticeVector n = ccw_normal(w.ray());
        bool trivial = r.lx.is_zero() && r.ly.is_zero();
        TruncatedSeries A(K);
        if (!trivial)
            A = add(scale(r.lx, Rational(d.a)), scale(r.ly, Rational(d.b)));
        std::map<std::int64_t, TruncatedSeries> powers;
        TruncatedSeries S(K);
        for (const auto& [key, c] : L.terms()) {
            if (trivial) {
                S.add_term(key.k, key.m, c);
                continue;
            }
            std::int64_t kappa = multiple_of(key.m, d);
            auto pit = powers.find(kappa);
            if (pit == powers.end())
                pit = powers.emplace(kappa, exp(scale(A.truncated(K - 1).with_order(K), Rational(kappa)))).first;
            for (const auto& [ek, ec] : pit->second.terms())
                S.add_term(key.k + ek.k, key.m + ek.m, c * ec);
        }
        if (n.a != 0)
            r.lx = add(r.lx, scale(S, Rational(n.a)));
        if (n.b != 0)
            r.ly = add(r.ly, scale(S, Rational(n.b)));
    }
    return r;
}

std::vector<Wall> sort_walls(std::vector<Wall> ws)
{
    std::stable_sort(ws.begin(), ws.end(), wall_less);
    return ws;
}

} // namespace

MonodromyLogs loop_monodromy_logs(const ScatteringDiagram& d)
{
    return monodromy_logs(d.sorted_walls(), d.order());
}

Automorphism loop_monodromy(const ScatteringDiagram& d)
{
    MonodromyLogs l = loop_monodromy_logs(d);
    const int K = d.order();
    return {mul(TruncatedSeries::monomial(K, 0, {1, 0}), exp(l.lx)),
            mul(TruncatedSeries::monomial(K, 0, {0, 1}), exp(l.ly))};
}

bool is_consistent(const ScatteringDiagram& d)
{
    MonodromyLogs l = loop_monodromy_logs(d);
    return l.lx.is_zero() && l.ly.is_zero();
}

ScatteringDiagram complete(const ScatteringDiagram& input)
{
    const int K = input.order();
    std::vector<Wall> walls = input.normalized().walls();

    auto find_outgoing = [&](LatticeVector dir) -> Wall* {
        for (Wall& w : walls)
            if (!w.incoming && w.direction == dir)
                return &w;
        return nullptr;
    };

    auto check_below = [&](const MonodromyLogs& l, int k) {
        for (const auto* s : {&l.lx, &l.ly})
            if (!s->is_zero() && s->terms().begin()->first.k < k)
                throw ConsistencyError("completion failed to close at order " +
                                       std::to_string(s->terms().begin()->first.k));
    };

    for (int k = 1; k <= K; ++k) {
        MonodromyLogs l = monodromy_logs(sort_walls(walls), k);
        check_below(l, k);
        std::map<LatticeVector, std::pair<Rational, Rational>> dev;
        for (const auto& [key, c] : l.lx.terms())
            dev[key.m].first += c;
        for (const auto& [key, c] : l.ly.terms())
            dev[key.m].second += c;
        for (const auto& [m, ab] : dev) {
            const auto& [alpha, beta] = ab;
            if (alpha == 0 && beta == 0)
                continue;
            if (m.is_zero())
                throw ConsistencyError("monodromy has a z^0 term at order " + std::to_string(k));
            if (alpha * m.a + beta * m.b != 0)
                throw ConsistencyError("order " + std::to_string(k) + " deviation at " + to_string(m) +
                                       " is not a derivation along its own ray");
            LatticeVector dir = primitive_part(m);
            LatticeVector n = ccw_normal(dir);
            Rational c = n.a != 0 ? Rational(-alpha / n.a) : Rational(-beta / n.b);
            TruncatedSeries corr = TruncatedSeries::one(K);
            corr.add_term(k, m, c);
            if (Wall* w = find_outgoing(dir))
                w->label = mul(w->label, corr);
            else
                walls.push_back({dir, false, corr});
        }
    }
    MonodromyLogs fin = monodromy_logs(sort_walls(walls), K);
    check_below(fin, K + 1);

    ScatteringDiagram out(K);
    for (Wall& w : walls)
        if (!w.label.is_one())
            out.add_wall(std::move(w));
    return out.normalized();
}

TruncatedSeries ray_function(const ScatteringDiagram& d, LatticeVector m)
{
    if (!is_primitive(m))
        throw PreconditionError("ray_function needs a primitive vector, got " + to_string(m));
    TruncatedSeries f = TruncatedSeries::one(d.order());
    for (const Wall& w : d.walls())
        if (w.ray() == m)
            f = mul(f, w.label);
    return f;
}

TPoly scattering_coef(const ScatteringDiagram& d, LatticeVector m)
{
    if (m.is_zero())
        throw PreconditionError("scattering_coef at the zero vector");
    LatticeVector m0 = primitive_part(m);
    TruncatedSeries out = TruncatedSeries::one(d.order()), in = TruncatedSeries::one(d.order());
    for (const Wall& w : d.walls()) {
        if (w.ray() != m0)
            continue;
        if (w.incoming)
            in = mul(in, w.label);
        else
            out = mul(out, w.label);
    }
    std::map<int, Rational> acc;
    for (const auto& [k, c] : coefficient(log(out), m))
        acc[k] += c;
    for (const auto& [k, c] : coefficient(log(in), -m))
        acc[k] += c;
    TPoly p;
    for (const auto& [k, c] : acc)
        if (c != 0)
            p.emplace_back(k, c);
    return p;
}

std::vector<FactorTerm> ghkk_factorization(const Wall& w)
{
    validate_wall(w);
    const int K = w.label.order();
    // (kappa, k) -> coefficient of t^k z^{kappa d} in log(label)
    std::map<std::pair<std::int64_t, int>, Rational> rest;
    const TruncatedSeries L = log(w.label);
    for (const auto& [key, c] : L.terms())
        rest[{multiple_of(key.m, w.direction), key.k}] += c;
    std::vector<FactorTerm> out;
    while (!rest.empty()) {
        auto it = rest.begin();
        auto [kappa, k] = it->first;
        Rational e = it->second;
        rest.erase(it);
        if (e == 0)
            continue;
        out.push_back({static_cast<int>(kappa), k, e});
        for (int j = 2; static_cast<std::int64_t>(j) * k <= K; ++j) {
            Rational contrib = e / j;
            if (j % 2 == 0)
                contrib = -contrib;
            auto& slot = rest[{j * kappa, j * k}];
            slot -= contrib;
            if (slot == 0)
                rest.erase({j * kappa, j * k});
        }
    }
    return out;
}

std::vector<LatticeVector> outgoing_directions(const ScatteringDiagram& d)
{
    std::vector<LatticeVector> out;
    for (const Wall& w : d.sorted_walls())
        if (!w.incoming && (out.empty() || out.back() != w.direction))
            out.push_back(w.direction);
    return out;
}

} // namespace scatlab
