#pragma once

#include <vector>

#include "scatlab/series.hpp"

namespace scatlab {

// Ray through the origin. The label lives in powers of z^direction; an incoming
// wall occupies the ray R_{<=0} * direction, an outgoing one R_{>=0} * direction.
struct Wall {
    LatticeVector direction;
    bool incoming = false;
    TruncatedSeries label;

    LatticeVector ray() const { return incoming ? -direction : direction; }

    friend bool operator==(const Wall&, const Wall&) = default;
};

// Throws PreconditionError unless direction is primitive and label = 1 + (terms c t^k z^{kappa*direction}, k, kappa >= 1).
void validate_wall(const Wall& w);

class ScatteringDiagram {
public:
    explicit ScatteringDiagram(int order = 0) : order_(order) {}

    int order() const { return order_; }
    const std::vector<Wall>& walls() const { return walls_; }

    void add_wall(Wall w);

    // Walls sorted by (angle of the ray set, incoming); stable on ties.
    std::vector<Wall> sorted_walls() const;

    // Walls with identical (direction, incoming) are merged and unit labels dropped.
    ScatteringDiagram normalized() const;

    ScatteringDiagram truncated(int order) const;

    friend bool operator==(const ScatteringDiagram& a, const ScatteringDiagram& b);

private:
    int order_;
    std::vector<Wall> walls_;
};

ScatteringDiagram make_basic(const std::vector<LatticeVector>& directions, const std::vector<int>& multiplicities,
                             int order);

// side = +1 uses the counterclockwise normal of the ray, -1 the opposite one.
TruncatedSeries cross_wall(const TruncatedSeries& f, const Wall& w, int side);

// Images of x and y under the counterclockwise loop around the origin.
struct Automorphism {
    TruncatedSeries x;
    TruncatedSeries y;

    bool is_identity() const;
};

Automorphism loop_monodromy(const ScatteringDiagram& d);

// Same loop, reported as log(theta(x)/x) and log(theta(y)/y); cheaper to test for identity.
struct MonodromyLogs {
    TruncatedSeries lx;
    TruncatedSeries ly;
};
MonodromyLogs loop_monodromy_logs(const ScatteringDiagram& d);

bool is_consistent(const ScatteringDiagram& d);

// Minimal consistent completion up to the diagram's order. Throws ConsistencyError if an order fails to close.
ScatteringDiagram complete(const ScatteringDiagram& d);

TruncatedSeries ray_function(const ScatteringDiagram& d, LatticeVector m);

// Coefficient of z^{kappa*d} in the log of each label on the ray of m = kappa*m0, where d is the
// label direction: z^m for the outgoing side, z^{-m} for an incoming wall whose ray set contains m.
TPoly scattering_coef(const ScatteringDiagram& d, LatticeVector m);

// label = prod (1 + t^k z^{kappa*direction})^exponent
struct FactorTerm {
    int kappa = 0;
    int k = 0;
    Rational exponent;
};
std::vector<FactorTerm> ghkk_factorization(const Wall& w);

std::vector<LatticeVector> outgoing_directions(const ScatteringDiagram& d);

} // namespace scatlab
