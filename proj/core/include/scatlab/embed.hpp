#pragma once

#include <string>
#include <vector>

#include "scatlab/series.hpp"

namespace scatlab {

// Fib_1 = Fib_2 = 1; throws for n <= 0.
Integer fib(std::int64_t n);

struct StaircaseStep {
    int k = 0;
    Rational alpha;    // Fib_{2k+1}^2 / Fib_{2k-1}^2
    Rational beta;     // Fib_{2k+3} / Fib_{2k-1}
    Rational slope;    // c = slope * a on [alpha, beta]
    Rational plateau;  // c on [beta, alpha_{k+1}]
};

// k >= 0, with Fib_{-1} = 1 so that alpha_0 = 1, beta_0 = 2.
StaircaseStep staircase_step(int k);

// a >= tau^4, decided as a >= 7/2 and a^2 - 7a + 1 >= 0
bool at_or_above_tau4(const Rational& a);

enum class Regime { StepSlope, StepPlateau, Folding };

struct EmbedValue {
    Rational c;
    Regime regime = Regime::Folding;
    int k = 0;
    bool breakpoint = false;  // a is some alpha_k or beta_k
};

// "step-slope:k", "step-plateau:k" or "folding"
std::string regime_tag(const EmbedValue& v);

EmbedValue c_ball_stab(const Rational& a);

Rational lower_bound_from_curve(std::int64_t p, std::int64_t q);
Rational folding_bound(const Rational& a);
Rational unimonotone_bound(const Rational& a);

struct TableRow {
    Rational a;
    EmbedValue value;
};

// n evenly spaced samples in [a_min, a_max] merged with every alpha_k, beta_k (k <= max_k) in range.
std::vector<TableRow> staircase_table(const Rational& a_min, const Rational& a_max, int n, int max_k = 12);
// header a_num,a_den,c_num,c_den,regime
std::string staircase_csv(const std::vector<TableRow>& rows);

} // namespace scatlab
