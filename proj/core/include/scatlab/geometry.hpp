#pragma once

#include <utility>
#include <vector>

#include "scatlab/delpezzo.hpp"

namespace scatlab {

// warning is set when the value is not an integer (inputs outside the index-zero setting).
struct Delta {
    Rational value;
    bool warning = false;
};

// 1/2 (d-1)(d-2) - 1/2 (p-1)(q-1)
Delta delta(std::int64_t d, std::int64_t p, std::int64_t q);
// 1/2 (d-2)(d-3) - 1/2 (p-1)(q-1): the same count one degree lower
Delta delta_minus(std::int64_t d, std::int64_t p, std::int64_t q);

struct DminResult {
    std::int64_t value = 0;
    bool certified = false;
    Rational delta;
};

// Plane curves in CP^2 with one (p,q) cusp.
DminResult d_min_certified(std::int64_t p, std::int64_t q);

bool theoremB_exists(std::int64_t p, std::int64_t q);

Rational S_map(int K, const Rational& x);
Rational R_map(int K, const Rational& x);
std::vector<Rational> S_orbit(int K, const Rational& x, int steps);

using Pair = std::pair<std::int64_t, std::int64_t>;

// Branch maps on (p,q). The first/second case can be requested explicitly; every case is an involution.
Pair phi_branch(int K, std::int64_t p, std::int64_t q);
Pair psi_branch(int K, std::int64_t p, std::int64_t q);
Pair phi_case(int K, std::int64_t p, std::int64_t q, int which);
Pair psi_case(int K, std::int64_t p, std::int64_t q, int which);

Pair mutate(int K, std::int64_t p, std::int64_t q);
Integer quad_form(int K, std::int64_t p, std::int64_t q);
bool light_cone_ok(int K, std::int64_t p, std::int64_t q, std::int64_t delta);

struct SeedResult {
    std::int64_t p0 = 0, q0 = 0;
    int steps = 0;
    // q0 = 1 with delta = 0, or q0 = 2 with delta = 0 and K = 3
    bool is_seed = false;
};

// Mutates while the new q satisfies 1 <= Kq - p <= q.
SeedResult seed_reduce(int K, std::int64_t p, std::int64_t q, std::int64_t delta, int max_steps = 1000);

// Terminal pairs below a_acc carrying a delta = 0 class (c1 = p+q, A.A = pq-1), excluding (K-1,1).
std::vector<Pair> seed_pairs(Surface s);

} // namespace scatlab
