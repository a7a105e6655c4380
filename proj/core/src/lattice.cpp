#include "scatlab/lattice.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "scatlab/errors.hpp"

namespace scatlab {

Sublattice::Sublattice(LatticeVector g1, LatticeVector g2) : g1_(g1), g2_(g2)
{
    if (det(g1, g2) == 0)
        throw PreconditionError("sublattice generators " + to_string(g1) + ", " + to_string(g2) + " are colinear");
}

std::int64_t Sublattice::index() const
{
    return std::llabs(det(g1_, g2_));
}

std::pair<Rational, Rational> Sublattice::coords(LatticeVector m) const
{
    Rational d(det(g1_, g2_));
    return {Rational(det(m, g2_)) / d, Rational(det(g1_, m)) / d};
}

bool Sublattice::contains(LatticeVector m) const
{
    auto [x, y] = coords(m);
    return x.get_den() == 1 && y.get_den() == 1;
}

RationalMatrix2 Sublattice::to_standard() const
{
    return RationalMatrix2::from(from_standard()).inverse();
}

std::int64_t nu(LatticeVector m, const Sublattice& L)
{
    if (m.is_zero())
        throw PreconditionError("nu is undefined at the zero vector");
    LatticeVector n0 = ccw_normal(primitive_part(m));
    return std::gcd(pairing(n0, L.g1()), pairing(n0, L.g2()));
}

ScatteringDiagram pushforward(const ScatteringDiagram& d, const IntMatrix2& phi)
{
    if (phi.det() == 0)
        throw PreconditionError("pushforward along a singular map");
    ScatteringDiagram out(d.order());
    for (const Wall& w : d.walls())
        out.add_wall({primitive_part(phi.apply(w.direction)), w.incoming, substitute(w.label, phi)});
    return out;
}

ScatteringDiagram root_diagram(const ScatteringDiagram& d, const Sublattice& L)
{
    ScatteringDiagram out(d.order());
    for (const Wall& w : d.walls())
        out.add_wall({w.direction, w.incoming, nth_root(w.label, nu(w.direction, L))});
    return out;
}

ScatteringDiagram standard_completion(int l1, int l2, int order)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, ScatteringDiagram> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({l1, l2});
    if (it != cache.end() && it->second.order() >= order)
        return it->second.order() == order ? it->second : it->second.truncated(order);
    ScatteringDiagram s = complete(make_basic({{1, 0}, {0, 1}}, {l1, l2}, order));
    cache.insert_or_assign({l1, l2}, s);
    return s;
}

namespace {

struct Reduced {
    Sublattice L;
    int s1, s2;
};

Reduced reduced_data(LatticeVector m1, LatticeVector m2, int l1, int l2)
{
    if (!is_primitive(m1) || !is_primitive(m2))
        throw PreconditionError("directions must be primitive");
    Sublattice L(m1, m2);
    return {L, static_cast<int>(nu(m1, L)) * l1, static_cast<int>(nu(m2, L)) * l2};
}

} // namespace

TruncatedSeries reduce_basic(LatticeVector m1, LatticeVector m2, int l1, int l2, LatticeVector m, int order)
{
    Reduced r = reduced_data(m1, m2, l1, l2);
    if (m.is_zero())
        throw PreconditionError("reduce_basic at the zero vector");
    auto [x, y] = r.L.coords(m);
    if (x < 0 || y < 0)
        throw PreconditionError(to_string(m) + " is outside the cone spanned by " + to_string(m1) + ", " +
                                to_string(m2));
    // primitive standard direction on the same ray
    Integer den = lcm(x.get_den(), y.get_den());
    Integer xa = x.get_num() * (den / x.get_den()), yb = y.get_num() * (den / y.get_den());
    LatticeVector ray = primitive_part({xa.get_si(), yb.get_si()});
    ScatteringDiagram std_diag = standard_completion(r.s1, r.s2, order);
    TruncatedSeries f = substitute(ray_function(std_diag, ray), r.L.from_standard());
    return nth_root(f, nu(m, r.L));
}

TPoly coef_via_reduction(LatticeVector m1, LatticeVector m2, int l1, int l2, LatticeVector m, int order)
{
    Reduced r = reduced_data(m1, m2, l1, l2);
    if (m.is_zero())
        throw PreconditionError("coef_via_reduction at the zero vector");
    if (!r.L.contains(m))
        return {};
    LatticeVector target = r.L.to_standard().apply_integral(m);
    TPoly p = scattering_coef(standard_completion(r.s1, r.s2, order), target);
    Rational v(nu(m, r.L));
    for (auto& [k, c] : p)
        c /= v;
    return p;
}

} // namespace scatlab
