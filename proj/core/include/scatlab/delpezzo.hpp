#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scatlab/lattice.hpp"
#include "scatlab/quadratic.hpp"

namespace scatlab {

enum class Surface { CP2, CP1xCP1, Bl1, Bl2, Bl3, Bl4 };

// One affine piece of wp: active when p*den >= num*q (or > when strict); the last piece is the fallback.
struct WpBranch {
    std::int64_t num = 0, den = 1;
    bool strict = false;
    IntMatrix2 map;
};

struct ToricModel {
    Surface id;
    std::string name;
    int K = 0;  // degree K + 2
    std::vector<LatticeVector> m;
    std::vector<int> l;
    LatticeVector m_N;
    std::vector<WpBranch> branches;

    int J() const { return static_cast<int>(m.size()); }
    // J = 3 counts go through a direct 3-ray completion, outside the proven J = 2 setting.
    bool experimental() const { return J() != 2; }
};

const ToricModel& model(Surface s);
const std::vector<Surface>& all_surfaces();
// Accepts CP2, CP1xCP1, Bl1..Bl4 (case-insensitive); throws PreconditionError otherwise.
Surface parse_surface(std::string_view name);

LatticeVector wp(const ToricModel& X, std::int64_t p, std::int64_t q);
// Preimage with (j,0) ~ (0,j) reported as (j,0); wp_inverse(0) = (0,0).
std::pair<std::int64_t, std::int64_t> wp_inverse(const ToricModel& X, LatticeVector m);

// Exact (xi_-, xi_+) of D^{l1,l2}: roots of t^2/l2 - t + 1/l1.
std::pair<QuadraticNumber, QuadraticNumber> xi_pm(int l1, int l2);
// (a,b) with b/a strictly between the roots; a > 0, b >= 0.
bool in_dense(int l1, int l2, LatticeVector v);
std::vector<LatticeVector> discrete_rays(int l1, int l2, std::int64_t bound);
bool is_discrete_ray(int l1, int l2, LatticeVector v);

enum class Reason { LatticeMiss, DiscreteCorner, DenseRegion, IncomingRay, None };
std::string to_string(Reason r);

struct Existence {
    bool exists = false;
    Reason reason = Reason::None;
    LatticeVector wp;
    std::optional<LatticeVector> phi;  // image in the standard lattice when wp lies in <m1, m2>
};

Existence exists_wp_curve(const ToricModel& X, std::int64_t p, std::int64_t q);

struct CountResult {
    LatticeVector wp;
    std::int64_t nu = 0;  // 0 when wp is not in the sublattice
    std::optional<LatticeVector> phi;
    int required_order = 0;
    TPoly coef;
    Integer N;
    Reason reason = Reason::None;
    bool experimental = false;
};

// Minimal truncation order at which the coefficient of the (p,q) count is complete.
int required_order(const ToricModel& X, std::int64_t p, std::int64_t q);

// order defaults to required_order; a smaller explicit order is refused.
CountResult count_N(const ToricModel& X, std::int64_t p, std::int64_t q, std::optional<int> order = std::nullopt);

// (K + sqrt(K^2 - 4)) / 2
QuadraticNumber a_acc(int K);
inline QuadraticNumber a_acc(const ToricModel& X) { return a_acc(X.K); }
bool is_above_acc(int K, const Rational& a);

} // namespace scatlab
