#include "scatlab/embed.hpp"

#include <algorithm>
#include <sstream>

#include "scatlab/errors.hpp"

namespace scatlab {

namespace {

// Fib_n for n >= -1
Integer fib_ext(std::int64_t n)
{
    if (n == -1)
        return 1;
    Integer r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational alpha(int k)
{
    Integer a = fib_ext(2 * k + 1), b = fib_ext(2 * k - 1);
    return frac(a * a, b * b);
}

} // namespace

Integer fib(std::int64_t n)
{
    if (n <= 0)
        throw PreconditionError("fib needs n >= 1");
    return fib_ext(n);
}

StaircaseStep staircase_step(int k)
{
    if (k < 0)
        throw PreconditionError("staircase index must be >= 0");
    StaircaseStep s;
    s.k = k;
    s.alpha = alpha(k);
    s.beta = Rational(fib_ext(2 * k + 3), fib_ext(2 * k - 1));
    s.slope = Rational(fib_ext(2 * k - 1), fib_ext(2 * k + 1));
    s.plateau = Rational(fib_ext(2 * k + 3), fib_ext(2 * k + 1));
    s.alpha.canonicalize();
    s.beta.canonicalize();
    s.slope.canonicalize();
    s.plateau.canonicalize();
    return s;
}

bool at_or_above_tau4(const Rational& a)
{
    return a >= frac(7, 2) && a * a - 7 * a + 1 >= 0;
}

std::string regime_tag(const EmbedValue& v)
{
    switch (v.regime) {
    case Regime::StepSlope: return "step-slope:" + std::to_string(v.k);
    case Regime::StepPlateau: return "step-plateau:" + std::to_string(v.k);
    case Regime::Folding: return "folding";
    }
    return "folding";
}

EmbedValue c_ball_stab(const Rational& a)
{
    if (a < 1)
        throw PreconditionError("c_ball_stab needs a >= 1");
    EmbedValue v;
    if (at_or_above_tau4(a)) {
        v.c = folding_bound(a);
        v.regime = Regime::Folding;
        return v;
    }
    // largest k with alpha_k <= a; alpha_k increases to tau^4 > a
    int lo = 0, hi = 1;
    while (alpha(hi) <= a) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (alpha(mid) <= a ? lo : hi) = mid;
    }
    StaircaseStep s = staircase_step(lo);
    v.k = lo;
    v.breakpoint = a == s.alpha || a == s.beta;
    if (a <= s.beta) {
        v.regime = Regime::StepSlope;
        v.c = a * s.slope;
    } else {
        v.regime = Regime::StepPlateau;
        v.c = s.plateau;
    }
    return v;
}

Rational lower_bound_from_curve(std::int64_t p, std::int64_t q)
{
    if (p <= 0 || q <= 0)
        throw PreconditionError("lower_bound_from_curve needs positive p, q");
    Rational r(p, p + q);
    r.canonicalize();
    return r;
}

Rational folding_bound(const Rational& a)
{
    if (a <= 0)
        throw PreconditionError("folding_bound needs a > 0");
    return 3 * a / (a + 1);
}

Rational unimonotone_bound(const Rational& a)
{
    if (a <= 0)
        throw PreconditionError("unimonotone_bound needs a > 0");
    return a / (a + 1);
}

std::vector<TableRow> staircase_table(const Rational& a_min, const Rational& a_max, int n, int max_k)
{
    if (a_min < 1 || a_min >= a_max)
        throw PreconditionError("staircase_table needs 1 <= a_min < a_max");
    if (n < 1)
        throw PreconditionError("staircase_table needs n >= 1");
    std::vector<Rational> xs;
    for (int i = 0; i < n; ++i) {
        Rational x = n == 1 ? a_min : a_min + (a_max - a_min) * frac(i, n - 1);
        xs.push_back(x);
    }
    for (int k = 0; k <= max_k; ++k) {
        StaircaseStep s = staircase_step(k);
        for (const Rational& x : {s.alpha, s.beta})
            if (x >= a_min && x <= a_max)
                xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<TableRow> rows;
    for (const Rational& x : xs)
        rows.push_back({x, c_ball_stab(x)});
    return rows;
}

std::string staircase_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "a_num,a_den,c_num,c_den,regime\n";
    for (const auto& r : rows)
        os << r.a.get_num().get_str() << ',' << r.a.get_den().get_str() << ',' << r.value.c.get_num().get_str() << ','
           << r.value.c.get_den().get_str() << ',' << regime_tag(r.value) << '\n';
    return os.str();
}

} // namespace scatlab
