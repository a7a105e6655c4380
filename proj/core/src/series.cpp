#include "scatlab/series.hpp"

#include <numeric>
#include <sstream>

#include "scatlab/errors.hpp"

namespace scatlab {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto bad = [&] { return PreconditionError("malformed rational: '" + text + "'"); };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false))
        throw bad();
    if (num[0] == '+')
        num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0)
        throw bad();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(LatticeVector m)
{
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

std::int64_t gcd(LatticeVector m)
{
    if (m.is_zero())
        throw PreconditionError("gcd of the zero vector is undefined");
    return std::gcd(m.a, m.b);
}

LatticeVector primitive_part(LatticeVector m)
{
    auto g = gcd(m);
    return {m.a / g, m.b / g};
}

namespace {
int half_plane(LatticeVector v)
{
    return (v.b > 0 || (v.b == 0 && v.a > 0)) ? 0 : 1;
}
} // namespace

bool angle_less(LatticeVector u, LatticeVector v)
{
    int hu = half_plane(u), hv = half_plane(v);
    if (hu != hv)
        return hu < hv;
    return det(u, v) > 0;
}

RationalMatrix2 RationalMatrix2::inverse() const
{
    Rational d = det();
    if (d == 0)
        throw PreconditionError("matrix is singular");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

std::pair<Rational, Rational> RationalMatrix2::apply(LatticeVector m) const
{
    return {a11 * m.a + a12 * m.b, a21 * m.a + a22 * m.b};
}

LatticeVector RationalMatrix2::apply_integral(LatticeVector m) const
{
    auto [x, y] = apply(m);
    if (x.get_den() != 1 || y.get_den() != 1)
        throw PreconditionError("non-integral image of " + to_string(m));
    return {x.get_num().get_si(), y.get_num().get_si()};
}

Rational eval_at_one(const TPoly& p)
{
    Rational s = 0;
    for (const auto& [k, c] : p)
        s += c;
    return s;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order)
{
    if (order < 0)
        throw PreconditionError("negative truncation order");
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries f(order);
    f.add_term(0, {}, 1);
    return f;
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, LatticeVector m, const Rational& c)
{
    TruncatedSeries f(order);
    f.add_term(k, m, c);
    return f;
}

TruncatedSeries TruncatedSeries::binomial_power(int order, LatticeVector m, int l)
{
    if (l < 0)
        throw PreconditionError("negative multiplicity");
    TruncatedSeries f(order);
    Integer binom = 1;
    for (int j = 0; j <= l && j <= order; ++j) {
        f.add_term(j, static_cast<std::int64_t>(j) * m, Rational(binom));
        binom = binom * (l - j) / (j + 1);
    }
    return f;
}

Rational TruncatedSeries::coeff(int k, LatticeVector m) const
{
    auto it = terms_.find({k, m});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncatedSeries::is_unit() const
{
    auto it = terms_.begin();
    if (it == terms_.end() || it->first.k != 0 || !it->first.m.is_zero() || it->second != 1)
        return false;
    ++it;
    return it == terms_.end() || it->first.k > 0;
}

bool TruncatedSeries::is_one() const
{
    return terms_.size() == 1 && is_unit();
}

bool TruncatedSeries::has_zero_constant() const
{
    return terms_.empty() || terms_.begin()->first.k > 0;
}

void TruncatedSeries::add_term(int k, LatticeVector m, const Rational& c)
{
    if (k > order_ || c == 0)
        return;
    if (k < 0)
        throw PreconditionError("negative t-order");
    auto [it, inserted] = terms_.try_emplace({k, m}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    TruncatedSeries f(order);
    for (const auto& [key, c] : terms_) {
        if (key.k > order)
            break;
        f.terms_.emplace_hint(f.terms_.end(), key, c);
    }
    return f;
}

TruncatedSeries TruncatedSeries::with_order(int order) const
{
    if (order < order_)
        return truncated(order);
    TruncatedSeries f = *this;
    f.order_ = order;
    return f;
}

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g)
{
    if (f.order() != g.order())
        throw PreconditionError("mismatched truncation orders " + std::to_string(f.order()) + " and " +
                                std::to_string(g.order()));
}

// Series split by t-degree; grade k holds the Laurent polynomial in z multiplying t^k.
using Grade = std::vector<std::pair<LatticeVector, Rational>>;
using Graded = std::vector<Grade>;

Graded split(const TruncatedSeries& f)
{
    Graded out(f.order() + 1);
    for (const auto& [key, c] : f.terms())
        out[key.k].emplace_back(key.m, c);
    return out;
}

// acc += coef * (u * v), z-part only
void accumulate(std::map<LatticeVector, Rational>& acc, const Grade& u, const Grade& v, const Rational& coef)
{
    Rational tmp;
    for (const auto& [mu, cu] : u) {
        for (const auto& [mv, cv] : v) {
            tmp = cu * cv;
            if (coef != 1)
                tmp *= coef;
            auto [it, inserted] = acc.try_emplace(mu + mv, tmp);
            if (!inserted)
                it->second += tmp;
        }
    }
}

Grade to_grade(const std::map<LatticeVector, Rational>& acc)
{
    Grade g;
    g.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c != 0)
            g.emplace_back(m, c);
    return g;
}

TruncatedSeries join(const Graded& gr, int order)
{
    TruncatedSeries f(order);
    for (int k = 0; k <= order && k < static_cast<int>(gr.size()); ++k)
        for (const auto& [m, c] : gr[k])
            f.add_term(k, m, c);
    return f;
}

} // namespace

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g)
{
    require_same_order(f, g);
    TruncatedSeries r = f;
    for (const auto& [key, c] : g.terms())
        r.add_term(key.k, key.m, c);
    return r;
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g)
{
    require_same_order(f, g);
    TruncatedSeries r = f;
    for (const auto& [key, c] : g.terms())
        r.add_term(key.k, key.m, -c);
    return r;
}

TruncatedSeries scale(const TruncatedSeries& f, const Rational& c)
{
    TruncatedSeries r(f.order());
    if (c == 0)
        return r;
    for (const auto& [key, v] : f.terms())
        r.add_term(key.k, key.m, v * c);
    return r;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g)
{
    require_same_order(f, g);
    const int K = f.order();
    Graded a = split(f), b = split(g);
    Graded out(K + 1);
    for (int k = 0; k <= K; ++k) {
        std::map<LatticeVector, Rational> acc;
        for (int i = 0; i <= k; ++i)
            if (!a[i].empty() && !b[k - i].empty())
                accumulate(acc, a[i], b[k - i], 1);
        out[k] = to_grade(acc);
    }
    return join(out, K);
}

TruncatedSeries int_pow(const TruncatedSeries& f, std::int64_t e)
{
    if (e < 0) {
        if (!f.is_unit())
            throw PreconditionError("negative power of a series whose constant term is not 1");
        return exp(scale(log(f), Rational(e)));
    }
    TruncatedSeries result = TruncatedSeries::one(f.order());
    TruncatedSeries base = f;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    return result;
}

TruncatedSeries exp(const TruncatedSeries& g)
{
    if (!g.has_zero_constant())
        throw PreconditionError("exp needs a series without t^0 terms");
    const int K = g.order();
    Graded F = split(g);
    Graded E(K + 1);
    E[0] = {{LatticeVector{}, Rational(1)}};
    // k E_k = sum_j j F_j E_{k-j}
    for (int k = 1; k <= K; ++k) {
        std::map<LatticeVector, Rational> acc;
        for (int j = 1; j <= k; ++j)
            if (!F[j].empty() && !E[k - j].empty())
                accumulate(acc, F[j], E[k - j], frac(j, k));
        E[k] = to_grade(acc);
    }
    return join(E, K);
}

TruncatedSeries log(const TruncatedSeries& f)
{
    if (!f.is_unit())
        throw PreconditionError("log needs constant term 1");
    const int K = f.order();
    Graded F = split(f);
    Graded L(K + 1);
    // k f_k = sum_{j=1..k} j L_j f_{k-j}, f_0 = 1
    for (int k = 1; k <= K; ++k) {
        std::map<LatticeVector, Rational> acc;
        for (const auto& [m, c] : F[k])
            acc.emplace(m, c);
        for (int j = 1; j < k; ++j)
            if (!L[j].empty() && !F[k - j].empty())
                accumulate(acc, L[j], F[k - j], frac(-j, k));
        L[k] = to_grade(acc);
    }
    return join(L, K);
}

TruncatedSeries nth_root(const TruncatedSeries& f, std::int64_t n)
{
    if (n <= 0)
        throw PreconditionError("root index must be positive");
    if (n == 1)
        return f;
    return exp(scale(log(f), frac(1, n)));
}

TruncatedSeries substitute(const TruncatedSeries& f, const IntMatrix2& phi)
{
    if (phi.det() == 0)
        throw PreconditionError("substitution matrix is singular");
    TruncatedSeries r(f.order());
    for (const auto& [key, c] : f.terms())
        r.add_term(key.k, phi.apply(key.m), c);
    return r;
}

TruncatedSeries substitute(const TruncatedSeries& f, const RationalMatrix2& phi)
{
    if (phi.det() == 0)
        throw PreconditionError("substitution matrix is singular");
    TruncatedSeries r(f.order());
    for (const auto& [key, c] : f.terms())
        r.add_term(key.k, phi.apply_integral(key.m), c);
    return r;
}

TPoly coefficient(const TruncatedSeries& f, LatticeVector m)
{
    TPoly out;
    for (const auto& [key, c] : f.terms())
        if (key.m == m)
            out.emplace_back(key.k, c);
    return out;
}

std::string to_string(const TruncatedSeries& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str();
        if (key.k > 0)
            os << "*t^" << key.k;
        if (!key.m.is_zero())
            os << "*z^" << to_string(key.m);
    }
    return os.str();
}

} // namespace scatlab
