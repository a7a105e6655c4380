#pragma once

#include <string>

#include "scatlab/series.hpp"

namespace scatlab {

// rational + coeff * sqrt(radicand), radicand squarefree and > 1 (or coeff = 0).
struct QuadraticNumber {
    Rational rational;
    Rational coeff;
    Integer radicand = 0;

    // r + c sqrt(n); extracts square factors from n.
    static QuadraticNumber make(const Rational& r, const Rational& c, const Integer& n);

    // sign of (x - *this), exact
    int compare(const Rational& x) const;
    double approx() const;
    std::string str() const;
};

} // namespace scatlab
