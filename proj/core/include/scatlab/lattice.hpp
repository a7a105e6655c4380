#pragma once

#include "scatlab/scattering.hpp"

namespace scatlab {

// Rank two sublattice M' of Z^2 with basis g1, g2.
class Sublattice {
public:
    Sublattice(LatticeVector g1, LatticeVector g2);
    static Sublattice full() { return {{1, 0}, {0, 1}}; }

    LatticeVector g1() const { return g1_; }
    LatticeVector g2() const { return g2_; }
    std::int64_t index() const;

    bool contains(LatticeVector m) const;
    // (x, y) with m = x g1 + y g2
    std::pair<Rational, Rational> coords(LatticeVector m) const;
    // g_i -> e_i
    RationalMatrix2 to_standard() const;
    // e_i -> g_i
    IntMatrix2 from_standard() const { return IntMatrix2::from_columns(g1_, g2_); }

private:
    LatticeVector g1_, g2_;
};

// Index of Ann_N(m) in Ann_{N'}(m). Depends only on the ray of m; throws for m = 0.
std::int64_t nu(LatticeVector m, const Sublattice& L);

// Image of a diagram under an invertible integer map; directions are re-primitivized.
ScatteringDiagram pushforward(const ScatteringDiagram& d, const IntMatrix2& phi);

// Every label replaced by its nu(direction)-th root.
ScatteringDiagram root_diagram(const ScatteringDiagram& d, const Sublattice& L);

// Completion of D^{l1,l2}_{e1,e2} at the given order, shared between callers (thread-safe cache).
ScatteringDiagram standard_completion(int l1, int l2, int order);

// f^{l1,l2}_{m1,m2}(m) through one completion of the standard diagram.
TruncatedSeries reduce_basic(LatticeVector m1, LatticeVector m2, int l1, int l2, LatticeVector m, int order);

// (1/nu(m)) Coef at z^{phi(m)} of S(D^{nu1 l1, nu2 l2}); empty when m is not in <m1, m2>.
TPoly coef_via_reduction(LatticeVector m1, LatticeVector m2, int l1, int l2, LatticeVector m, int order);

} // namespace scatlab
