#include "scatlab/delpezzo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "scatlab/errors.hpp"

namespace scatlab {

namespace {

IntMatrix2 rows(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    return {a, b, c, d};
}

std::vector<ToricModel> build_models()
{
    // Table 1; each branch maps (p,q) to (row1 . (p,q), row2 . (p,q)).
    std::vector<ToricModel> ms;
    ms.push_back({Surface::CP2, "CP2", 7, {{1, 0}, {-1, -3}}, {1, 1}, {0, -1},
                  {{2, 1, false, rows(0, 1, -1, 5)},
                   {1, 2, false, rows(1, -1, 2, -1)},
                   {0, 1, false, rows(-1, 0, 2, -1)}}});
    ms.push_back({Surface::CP1xCP1, "CP1xCP1", 6, {{-1, -2}, {1, 0}}, {1, 2}, {0, -1},
                  {{3, 1, true, rows(0, 1, -1, 5)},
                   {1, 1, false, rows(1, -2, 1, -1)},
                   {0, 1, false, rows(-1, 0, 1, -1)}}});
    ms.push_back({Surface::Bl1, "Bl1", 6, {{1, 0}, {0, -1}, {-1, -2}}, {1, 1, 1}, {0, -1},
                  {{2, 1, false, rows(0, 1, -1, 4)},
                   {1, 1, false, rows(1, -1, 1, 0)},
                   {1, 2, false, rows(1, -1, 2, -1)},
                   {0, 1, false, rows(-1, 0, 2, -1)}}});
    ms.push_back({Surface::Bl2, "Bl2", 5, {{1, 0}, {-1, -1}, {0, -1}}, {1, 1, 2}, {0, -1},
                  {{2, 1, false, rows(0, 1, -1, 3)},
                   {1, 1, true, rows(1, -1, 0, 1)},
                   {1, 2, false, rows(1, -1, 2, -1)},
                   {0, 1, false, rows(-1, 0, 2, -1)}}});
    ms.push_back({Surface::Bl3, "Bl3", 4, {{-1, -1}, {1, 0}}, {2, 3}, {0, -1},
                  {{2, 1, false, rows(0, 1, -1, 3)},
                   {1, 1, false, rows(2, -3, 1, -1)},
                   {0, 1, false, rows(-1, 0, 1, -1)}}});
    ms.push_back({Surface::Bl4, "Bl4", 3, {{1, 0}, {0, 1}}, {1, 5}, {1, 2},
                  {{3, 2, false, rows(1, -2, 2, -3)},
                   {1, 1, false, rows(-1, 1, 2, -3)},
                   {0, 1, false, rows(-1, 1, -3, 2)}}});
    return ms;
}

const std::vector<ToricModel>& models()
{
    static const std::vector<ToricModel> ms = build_models();
    return ms;
}

bool branch_applies(const WpBranch& br, std::int64_t p, std::int64_t q)
{
    std::int64_t lhs = p * br.den, rhs = br.num * q;
    return br.strict ? lhs > rhs : lhs >= rhs;
}

void require_coprime(std::int64_t p, std::int64_t q)
{
    if (p <= 0 || q <= 0)
        throw PreconditionError("p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw PreconditionError("p and q must be coprime, got " + std::to_string(p) + "," + std::to_string(q));
}

void require_hyperbolic(int l1, int l2)
{
    if (static_cast<std::int64_t>(l1) * l2 <= 4)
        throw PreconditionError("dense region needs l1*l2 > 4");
}

LatticeVector T1(int l1, LatticeVector v) { return {l1 * v.b - v.a, v.b}; }
LatticeVector T2(int l2, LatticeVector v) { return {v.a, l2 * v.a - v.b}; }

struct StandardData {
    Sublattice L;
    int s1, s2;
};

StandardData standard_data(const ToricModel& X)
{
    Sublattice L(X.m[0], X.m[1]);
    return {L, static_cast<int>(nu(X.m[0], L)) * X.l[0], static_cast<int>(nu(X.m[1], L)) * X.l[1]};
}

// Largest sum(k_i) with sum k_i m_i = v, k_i >= 0; -1 if none.
int max_degree(const ToricModel& X, LatticeVector v)
{
    Sublattice L(X.m[0], X.m[1]);
    if (X.J() == 2) {
        auto [x, y] = L.coords(v);
        if (x.get_den() != 1 || y.get_den() != 1 || x < 0 || y < 0)
            return -1;
        return static_cast<int>(x.get_num().get_si() + y.get_num().get_si());
    }
    int best = -1;
    std::int64_t bound = 4 * (std::llabs(v.a) + std::llabs(v.b)) + 8;
    for (std::int64_t k3 = 0; k3 <= bound; ++k3) {
        for (std::int64_t k4 = 0; k4 <= (X.J() > 3 ? bound : 0); ++k4) {
            LatticeVector r = v - k3 * X.m[2];
            if (X.J() > 3)
                r = r - k4 * X.m[3];
            auto [x, y] = L.coords(r);
            if (x.get_den() != 1 || y.get_den() != 1 || x < 0 || y < 0)
                continue;
            best = std::max(best, static_cast<int>(x.get_num().get_si() + y.get_num().get_si() + k3 + k4));
        }
    }
    return best;
}

ScatteringDiagram direct_completion(const ToricModel& X, int order)
{
    static std::mutex mu;
    static std::map<Surface, ScatteringDiagram> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(X.id);
    if (it != cache.end() && it->second.order() >= order)
        return it->second.truncated(order);
    ScatteringDiagram s = complete(make_basic(X.m, X.l, order));
    cache.insert_or_assign(X.id, s);
    return s;
}

} // namespace

const ToricModel& model(Surface s)
{
    for (const auto& m : models())
        if (m.id == s)
            return m;
    throw PreconditionError("unknown surface");
}

const std::vector<Surface>& all_surfaces()
{
    static const std::vector<Surface> all = {Surface::CP2, Surface::CP1xCP1, Surface::Bl1,
                                             Surface::Bl2, Surface::Bl3,     Surface::Bl4};
    return all;
}

Surface parse_surface(std::string_view name)
{
    std::string lower;
    for (char c : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (const auto& m : models()) {
        std::string mn;
        for (char c : m.name)
            mn.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (mn == lower)
            return m.id;
    }
    throw PreconditionError("unknown surface id '" + std::string(name) + "'");
}

LatticeVector wp(const ToricModel& X, std::int64_t p, std::int64_t q)
{
    if (p < 0 || q < 0)
        throw PreconditionError("wp needs nonnegative p, q");
    if (p == 0 && q == 0)
        throw PreconditionError("wp(0,0) is undefined");
    if (p == 0 || q == 0)
        return (p + q) * X.m_N;
    for (const auto& br : X.branches)
        if (branch_applies(br, p, q) || &br == &X.branches.back())
            return br.map.apply({p, q});
    return {};
}

std::pair<std::int64_t, std::int64_t> wp_inverse(const ToricModel& X, LatticeVector m)
{
    if (m.is_zero())
        return {0, 0};
    if (det(m, X.m_N) == 0) {
        std::int64_t j = X.m_N.a != 0 ? m.a / X.m_N.a : m.b / X.m_N.b;
        if (j > 0)
            return {j, 0};
    }
    for (const auto& br : X.branches) {
        RationalMatrix2 inv = RationalMatrix2::from(br.map).inverse();
        auto [x, y] = inv.apply(m);
        if (x.get_den() != 1 || y.get_den() != 1 || x < 0 || y < 0)
            continue;
        std::int64_t p = x.get_num().get_si(), q = y.get_num().get_si();
        if ((p != 0 || q != 0) && wp(X, p, q) == m)
            return {p, q};
    }
    throw ConsistencyError("wp_inverse found no preimage of " + to_string(m));
}

std::pair<QuadraticNumber, QuadraticNumber> xi_pm(int l1, int l2)
{
    require_hyperbolic(l1, l2);
    // l2/2 +- (1/(2 l1)) sqrt(l1 l2 (l1 l2 - 4))
    Integer n = Integer(l1) * l2;
    Integer rad = n * (n - 4);
    Rational c = frac(1, 2 * l1);
    return {QuadraticNumber::make(frac(l2, 2), -c, rad), QuadraticNumber::make(frac(l2, 2), c, rad)};
}

bool in_dense(int l1, int l2, LatticeVector v)
{
    require_hyperbolic(l1, l2);
    if (v.a <= 0 || v.b < 0)
        return false;
    // l1 l2 R(b/a) a^2 = l1 b^2 - l1 l2 a b + l2 a^2
    Integer a(static_cast<long>(v.a)), b(static_cast<long>(v.b));
    return Integer(l1) * b * b - Integer(l1) * l2 * a * b + Integer(l2) * a * a < 0;
}

std::vector<LatticeVector> discrete_rays(int l1, int l2, std::int64_t bound)
{
    require_hyperbolic(l1, l2);
    std::set<LatticeVector> out;
    for (int start = 0; start < 2; ++start) {
        LatticeVector v = start == 0 ? LatticeVector{1, 0} : LatticeVector{0, 1};
        bool use_t2 = start == 0;
        while (v.a + v.b <= bound) {
            out.insert(v);
            v = use_t2 ? T2(l2, v) : T1(l1, v);
            use_t2 = !use_t2;
        }
    }
    return {out.begin(), out.end()};
}

bool is_discrete_ray(int l1, int l2, LatticeVector v)
{
    if (v.a < 0 || v.b < 0)
        return false;
    auto rays = discrete_rays(l1, l2, v.a + v.b);
    return std::find(rays.begin(), rays.end(), v) != rays.end();
}

std::string to_string(Reason r)
{
    switch (r) {
    case Reason::LatticeMiss: return "lattice-miss";
    case Reason::DiscreteCorner: return "discrete-corner";
    case Reason::DenseRegion: return "dense-region";
    case Reason::IncomingRay: return "incoming-ray";
    case Reason::None: return "none";
    }
    return "none";
}

Existence exists_wp_curve(const ToricModel& X, std::int64_t p, std::int64_t q)
{
    require_coprime(p, q);
    if (X.J() != 2)
        throw PreconditionError("exists_wp_curve is only defined for J = 2 models; " + X.name + " has J = 3");
    Existence e;
    e.wp = wp(X, p, q);
    StandardData sd = standard_data(X);
    if (!sd.L.contains(e.wp)) {
        e.reason = Reason::LatticeMiss;
        return e;
    }
    LatticeVector v = sd.L.to_standard().apply_integral(e.wp);
    e.phi = v;
    if (v == LatticeVector{-1, 0} || v == LatticeVector{0, -1}) {
        e.exists = true;
        e.reason = Reason::IncomingRay;
    } else if (in_dense(sd.s1, sd.s2, v)) {
        e.exists = true;
        e.reason = Reason::DenseRegion;
    } else if (is_discrete_ray(sd.s1, sd.s2, v)) {
        e.exists = true;
        e.reason = Reason::DiscreteCorner;
    }
    return e;
}

int required_order(const ToricModel& X, std::int64_t p, std::int64_t q)
{
    LatticeVector w = wp(X, p, q);
    int deg = max_degree(X, w);
    if (deg >= 0)
        return deg;
    for (std::size_t i = 0; i < X.m.size(); ++i) {
        if (det(w, X.m[i]) == 0 && pairing(w, X.m[i]) < 0)
            return static_cast<int>(gcd(w));
    }
    return 0;
}

CountResult count_N(const ToricModel& X, std::int64_t p, std::int64_t q, std::optional<int> order)
{
    require_coprime(p, q);
    CountResult r;
    r.wp = wp(X, p, q);
    r.experimental = X.experimental();
    r.required_order = required_order(X, p, q);
    if (order && *order < r.required_order)
        throw PreconditionError("count at (" + std::to_string(p) + "," + std::to_string(q) + ") needs order >= " +
                                std::to_string(r.required_order) + ", got " + std::to_string(*order));
    if (X.J() == 2) {
        Existence e = exists_wp_curve(X, p, q);
        r.reason = e.reason;
        r.phi = e.phi;
        StandardData sd = standard_data(X);
        if (sd.L.contains(r.wp))
            r.nu = nu(r.wp, sd.L);
        if (r.required_order > 0)
            r.coef = coef_via_reduction(X.m[0], X.m[1], X.l[0], X.l[1], r.wp, r.required_order);
    } else {
        // generated lattice is Z^2 for both J = 3 models
        r.nu = 1;
        r.phi = r.wp;
        if (r.required_order > 0)
            r.coef = scattering_coef(direct_completion(X, r.required_order), r.wp);
        r.reason = Reason::None;
        for (std::size_t i = 0; i < X.m.size(); ++i)
            if (r.wp == -X.m[i] && !r.coef.empty())
                r.reason = Reason::IncomingRay;
    }
    for (const auto& [k, c] : r.coef)
        if (k > r.required_order)
            throw ConsistencyError("coefficient has t-degree above the homogeneity bound");
    Rational n = eval_at_one(r.coef);
    if (n.get_den() != 1 || n < 0)
        throw ConsistencyError("count at (" + std::to_string(p) + "," + std::to_string(q) +
                               ") is not a nonnegative integer: " + to_string(n));
    r.N = n.get_num();
    return r;
}

QuadraticNumber a_acc(int K)
{
    if (K < 3)
        throw PreconditionError("a_acc needs K >= 3");
    return QuadraticNumber::make(frac(K, 2), frac(1, 2), Integer(K) * K - 4);
}

bool is_above_acc(int K, const Rational& a)
{
    return a_acc(K).compare(a) > 0;
}

} // namespace scatlab
