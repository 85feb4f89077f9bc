#include "fgc/bounds.hpp"

#include <cmath>
#include <sstream>

namespace fgc {

double analytic_bound(const Rational& lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
    const double l = to_double(lambda);
    const double s = std::sqrt(l);
    return l * (l + 2 * s) / (2 * s + l - 1);
}

namespace {

double single_alpha_value(double lambda, double alpha) {
    // One nonzero beta-hat: beta = 1 / (1 + alpha(lambda - 1 + lambda*alpha)).
    const double beta = 1.0 / (1.0 + alpha * (lambda - 1.0 + lambda * alpha));
    return lambda * (1.0 + alpha * beta);
}

}  // namespace

EqMaxResult eq_max_value(const Rational& lambda, int threshold_count, int grid_resolution) {
    if (threshold_count < 1) throw std::invalid_argument("threshold count must be positive");
    const double l = to_double(lambda);
    const double alpha_star = 1.0 / std::sqrt(l);
    EqMaxResult r;
    r.argmax_alpha = alpha_star;
    r.beta_hat = std::sqrt(l) / (2 * std::sqrt(l) + l - 1);
    r.value = analytic_bound(lambda);
    // Numeric confirmation: the grid maximum must not exceed the analytic value
    // and must approach it.
    double best = 0;
    for (int i = 0; i <= grid_resolution; ++i) {
        best = std::max(best, single_alpha_value(l, static_cast<double>(i) / grid_resolution));
    }
    if (best > r.value + 1e-9 || best < r.value - 10.0 / grid_resolution)
        throw std::logic_error("grid search disagrees with the analytic optimum");
    return r;
}

TwoAlgoBound two_algo_bound_branches(const Rational& lambda, const Rational& tau) {
    if (lambda < 1 || tau < 1) throw std::invalid_argument("lambda and tau must be at least 1");
    const double l = to_double(lambda);
    const double t = to_double(tau);
    const double s = std::sqrt(1.0 + 4.0 * t);
    TwoAlgoBound b;
    b.first_branch = 1.0 + t;
    b.second_branch =
        l * (4 * t * t + s - 2 * t - 1) / ((1 - l) * s + 2 * t * t + (2 * l - 2) * t - 1 + l);
    b.value = std::min(b.first_branch, b.second_branch);
    return b;
}

double two_algo_bound(const Rational& lambda, const Rational& tau) {
    return two_algo_bound_branches(lambda, tau).value;
}

namespace {

void validate(const BoundProgram& p) {
    if (p.interior_count() < 1)
        throw std::invalid_argument("bound program needs at least one interior alpha");
    if (p.lambda < 1 || p.tau < 1) throw std::invalid_argument("lambda, tau must be >= 1");
    if (p.alphas.front() != 0 || p.alphas.back() != 1)
        throw std::invalid_argument("alpha list must start at 0 and end at 1");
    for (std::size_t i = 1; i < p.alphas.size(); ++i) {
        if (p.alphas[i] < p.alphas[i - 1])
            throw std::invalid_argument("alpha list must be non-decreasing");
        if (p.alphas[i] <= 0) throw std::invalid_argument("interior alphas must be positive");
    }
}

}  // namespace

LpProblem<Rational> build_bound_lp(const BoundProgram& p) {
    validate(p);
    const int N = p.interior_count();
    LpProblem<Rational> lp;
    lp.sense = LpSense::Maximize;
    lp.add_variable(Rational(1), Rational(1), std::nullopt);
    for (int j = 0; j < 2 * (N + 1); ++j) lp.add_variable(Rational(0), Rational(0), Rational(1));
    // Rebuild rows exactly (the double template path approximates coefficients).
    const auto a = [&](int i) { return p.alphas[static_cast<std::size_t>(i)]; };
    const int nvars = 1 + 2 * (N + 1);
    auto beta = [&](int j) { return 1 + j; };
    auto gamma = [&](int j) { return 1 + (N + 1) + j; };
    auto fresh_row = [&]() {
        LpRow<Rational> row;
        row.coeffs.assign(static_cast<std::size_t>(nvars), Rational(0));
        row.rel = LpRel::Le;
        row.rhs = Rational(0);
        return row;
    };
    {
        LpRow<Rational> row = fresh_row();
        row.coeffs[0] = 1;
        for (int j = 0; j <= N; ++j)
            row.coeffs[static_cast<std::size_t>(beta(j))] = -p.lambda * a(j + 1);
        row.rhs = p.lambda;
        lp.rows.push_back(std::move(row));
    }
    for (int i = 1; i <= N; ++i) {
        LpRow<Rational> row = fresh_row();
        row.coeffs[0] = 1;
        for (int j = 0; j < i; ++j)
            row.coeffs[static_cast<std::size_t>(beta(j))] -= p.lambda - 1 + p.lambda * a(j + 1);
        for (int j = 0; j <= N; ++j)
            row.coeffs[static_cast<std::size_t>(gamma(j))] -= p.lambda - 1;
        for (int j = i; j <= N; ++j)
            row.coeffs[static_cast<std::size_t>(gamma(j))] -= Rational(1) / a(j);
        row.rhs = 1;
        lp.rows.push_back(std::move(row));
    }
    if (p.with_b_rows) {
        for (int i = 1; i <= N; ++i) {
            LpRow<Rational> row = fresh_row();
            row.coeffs[0] = 1;
            for (int j = 0; j < i; ++j)
                row.coeffs[static_cast<std::size_t>(beta(j))] -= p.tau - 1 + a(j + 1);
            for (int j = 0; j <= N; ++j)
                row.coeffs[static_cast<std::size_t>(gamma(j))] -= p.tau - 1;
            for (int j = i; j <= N; ++j)
                row.coeffs[static_cast<std::size_t>(gamma(j))] -= Rational(1) / a(j);
            for (int j = 0; j < i; ++j)
                row.coeffs[static_cast<std::size_t>(gamma(j))] -= 1;
            row.rhs = 1;
            lp.rows.push_back(std::move(row));
        }
    }
    {
        LpRow<Rational> row = fresh_row();
        row.rel = LpRel::Eq;
        for (int j = 0; j <= N; ++j) {
            row.coeffs[static_cast<std::size_t>(beta(j))] = 1;
            row.coeffs[static_cast<std::size_t>(gamma(j))] = 1;
        }
        row.rhs = 1;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

BoundCertificate bounded_weight_lp(const BoundProgram& program) {
    validate(program);
    const LpProblem<Rational> lp = build_bound_lp(program);
    const LpSolution<Rational> sol = simplex_solve(lp);
    const int N = program.interior_count();
    BoundCertificate cert;
    cert.value = sol.objective;
    cert.z = sol.values[0];
    for (int j = 0; j <= N; ++j) cert.beta.push_back(sol.values[static_cast<std::size_t>(1 + j)]);
    for (int j = 0; j <= N; ++j)
        cert.gamma.push_back(sol.values[static_cast<std::size_t>(1 + (N + 1) + j)]);
    return cert;
}

double bounded_weight_lp_float(const BoundProgram& program) {
    return simplex_solve(to_float_problem(build_bound_lp(program))).objective;
}

std::string BoundCertificate::serialize() const {
    std::ostringstream out;
    out << "z " << format_rational(z) << '\n';
    for (std::size_t j = 0; j < beta.size(); ++j)
        out << "beta" << j << ' ' << format_rational(beta[j]) << '\n';
    for (std::size_t j = 0; j < gamma.size(); ++j)
        out << "gamma" << j << ' ' << format_rational(gamma[j]) << '\n';
    return out.str();
}

namespace {

std::vector<Rational> percents(const std::vector<int>& hundredths) {
    std::vector<Rational> out;
    for (int h : hundredths) out.push_back(Rational(h, 100));
    return out;
}

}  // namespace

std::vector<Rational> alpha_list_printed() {
    std::vector<int> h{0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
    for (int v = 51; v <= 99; ++v) {
        if (v == 66 || v == 88) continue;
        h.push_back(v);
    }
    h.push_back(100);
    return percents(h);
}

std::vector<Rational> alpha_list_regular() {
    std::vector<int> h{0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
    for (int v = 51; v <= 99; ++v) h.push_back(v);
    h.push_back(100);
    return percents(h);
}

}  // namespace fgc
