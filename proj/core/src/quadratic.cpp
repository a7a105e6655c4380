#include "scatlab/quadratic.hpp"

#include <cmath>

#include "scatlab/errors.hpp"

namespace scatlab {

QuadraticNumber QuadraticNumber::make(const Rational& r, const Rational& c, const Integer& n)
{
    if (n < 0)
        throw PreconditionError("negative radicand");
    Integer rest = n, square = 1;
    for (Integer p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
    }
    QuadraticNumber q{r, c * Rational(square), rest};
    if (q.radicand == 1) {
        q.rational += q.coeff;
        q.coeff = 0;
    }
    if (q.coeff == 0 || q.radicand == 0) {
        q.coeff = 0;
        q.radicand = 0;
    }
    return q;
}

int QuadraticNumber::compare(const Rational& x) const
{
    // x - r  vs  c sqrt(n)
    Rational lhs = x - rational;
    if (coeff == 0)
        return sgn(lhs);
    int sl = sgn(lhs), sr = sgn(coeff);
    if (sl != sr)
        return sl > sr ? 1 : -1;
    // same sign: compare squares, flipping when both negative
    Rational l2 = lhs * lhs, r2 = coeff * coeff * Rational(radicand);
    int c = l2 > r2 ? 1 : (l2 < r2 ? -1 : 0);
    return sl > 0 ? c : -c;
}

double QuadraticNumber::approx() const
{
    return rational.get_d() + coeff.get_d() * std::sqrt(radicand.get_d());
}

std::string QuadraticNumber::str() const
{
    if (coeff == 0)
        return to_string(rational);
    std::string s = rational == 0 ? "" : to_string(rational) + (coeff > 0 ? " + " : " - ");
    Rational c = rational == 0 ? coeff : abs(coeff);
    return s + to_string(c) + "*sqrt(" + radicand.get_str() + ")";
}

} // namespace scatlab
