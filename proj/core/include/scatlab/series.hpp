#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace scatlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical num/den; mpq_class(num, den) alone does not reduce.
inline Rational frac(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Always "num/den", also for integers.
std::string to_string(const Rational& q);
// Accepts "n" or "n/d"; throws PreconditionError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

struct LatticeVector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    LatticeVector operator-() const { return {-a, -b}; }
    friend LatticeVector operator+(LatticeVector u, LatticeVector v) { return {u.a + v.a, u.b + v.b}; }
    friend LatticeVector operator-(LatticeVector u, LatticeVector v) { return {u.a - v.a, u.b - v.b}; }
    friend LatticeVector operator*(std::int64_t k, LatticeVector v) { return {k * v.a, k * v.b}; }

    bool is_zero() const { return a == 0 && b == 0; }
};

std::string to_string(LatticeVector m);

// gcd of the coordinates; throws PreconditionError for (0,0).
std::int64_t gcd(LatticeVector m);
LatticeVector primitive_part(LatticeVector m);
inline bool is_primitive(LatticeVector m) { return !m.is_zero() && gcd(m) == 1; }

inline std::int64_t pairing(LatticeVector n, LatticeVector m) { return n.a * m.a + n.b * m.b; }
inline std::int64_t det(LatticeVector u, LatticeVector v) { return u.a * v.b - u.b * v.a; }

// Counterclockwise normal: <normal(d), v> > 0 when v is a positive rotation of d.
inline LatticeVector ccw_normal(LatticeVector d) { return {-d.b, d.a}; }

// Angle comparison on [0, 2pi) without floating point.
bool angle_less(LatticeVector u, LatticeVector v);

// Integer matrix acting on column vectors; columns are the images of e1, e2.
struct IntMatrix2 {
    std::int64_t a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    static IntMatrix2 from_columns(LatticeVector c1, LatticeVector c2) { return {c1.a, c2.a, c1.b, c2.b}; }
    LatticeVector apply(LatticeVector m) const { return {a11 * m.a + a12 * m.b, a21 * m.a + a22 * m.b}; }
    std::int64_t det() const { return a11 * a22 - a12 * a21; }

    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

struct RationalMatrix2 {
    Rational a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    static RationalMatrix2 from(const IntMatrix2& m) { return {m.a11, m.a12, m.a21, m.a22}; }
    Rational det() const { return a11 * a22 - a12 * a21; }
    RationalMatrix2 inverse() const;
    // Throws PreconditionError if the image is not integral.
    LatticeVector apply_integral(LatticeVector m) const;
    std::pair<Rational, Rational> apply(LatticeVector m) const;

    friend bool operator==(const RationalMatrix2&, const RationalMatrix2&) = default;
};

struct TermKey {
    int k = 0;
    LatticeVector m;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

// Polynomial in t: sorted (k, coefficient) pairs with nonzero coefficients.
using TPoly = std::vector<std::pair<int, Rational>>;
Rational eval_at_one(const TPoly& p);

// Finite sum of c t^k z^m, all k <= order. Zero coefficients are never stored.
class TruncatedSeries {
public:
    using Terms = std::map<TermKey, Rational>;

    explicit TruncatedSeries(int order = 0);

    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(int order, int k, LatticeVector m, const Rational& c = 1);
    // (1 + t z^m)^l
    static TruncatedSeries binomial_power(int order, LatticeVector m, int l);

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(int k, LatticeVector m) const;
    // t^0 part is exactly 1
    bool is_unit() const;
    bool is_one() const;
    // no t^0 terms at all
    bool has_zero_constant() const;

    void add_term(int k, LatticeVector m, const Rational& c);

    TruncatedSeries truncated(int order) const;
    // Same terms, larger bound. Only meaningful when the caller knows nothing was dropped.
    TruncatedSeries with_order(int order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_;
    Terms terms_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, const Rational& c);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries int_pow(const TruncatedSeries& f, std::int64_t e);
TruncatedSeries log(const TruncatedSeries& f);
TruncatedSeries exp(const TruncatedSeries& g);
TruncatedSeries nth_root(const TruncatedSeries& f, std::int64_t n);
TruncatedSeries substitute(const TruncatedSeries& f, const IntMatrix2& phi);
TruncatedSeries substitute(const TruncatedSeries& f, const RationalMatrix2& phi);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }

TPoly coefficient(const TruncatedSeries& f, LatticeVector m);

std::string to_string(const TruncatedSeries& f);

} // namespace scatlab
