#pragma once

#include "fgc/simplex.hpp"

namespace fgc {

// lambda * (lambda + 2*sqrt(lambda)) / (2*sqrt(lambda) + lambda - 1).
double analytic_bound(const Rational& lambda);

struct EqMaxResult {
    double value;
    double argmax_alpha;
    double beta_hat;
};
// Closed-form optimum of the single-threshold maximization: value matches
// analytic_bound(lambda) at alpha = 1/sqrt(lambda) and is independent of the
// number of threshold values. A grid search over alpha confirms the analytic
// optimum within the given resolution.
EqMaxResult eq_max_value(const Rational& lambda, int threshold_count, int grid_resolution = 4096);

struct TwoAlgoBound {
    double first_branch;    // 1 + tau
    double second_branch;   // closed form at alpha = (-1+sqrt(1+4 tau))/(2 tau)
    double value;           // min of the branches
};
TwoAlgoBound two_algo_bound_branches(const Rational& lambda, const Rational& tau);
double two_algo_bound(const Rational& lambda, const Rational& tau);

// Data of the bounded-weight factor-revealing LP. `alphas` is the full list
// alpha_0..alpha_{N+1} with alpha_0 = 0 and alpha_{N+1} = 1; interior values
// must be positive (they appear as divisors) and non-decreasing.
struct BoundProgram {
    std::vector<Rational> alphas;
    Rational lambda;
    Rational tau;
    bool with_b_rows = true;

    int interior_count() const { return static_cast<int>(alphas.size()) - 2; }
};

struct BoundCertificate {
    Rational value;
    Rational z;
    std::vector<Rational> beta;   // beta_0..beta_N
    std::vector<Rational> gamma;  // gamma_0..gamma_N
    std::string serialize() const;  // "var value" lines
};

LpProblem<Rational> build_bound_lp(const BoundProgram& program);
BoundCertificate bounded_weight_lp(const BoundProgram& program);
double bounded_weight_lp_float(const BoundProgram& program);

// The alpha list printed in the source analysis (59 values; 0.66 and 0.88 are
// absent) and the regularized 61-point version with those two values restored.
std::vector<Rational> alpha_list_printed();
std::vector<Rational> alpha_list_regular();

}  // namespace fgc
