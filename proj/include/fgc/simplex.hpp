#pragma once

#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "fgc/rational.hpp"

namespace fgc {

struct LpInfeasible : std::runtime_error {
    LpInfeasible() : std::runtime_error("LP is infeasible") {}
};
struct LpUnbounded : std::runtime_error {
    LpUnbounded() : std::runtime_error("LP is unbounded") {}
};

enum class LpSense { Minimize, Maximize };
enum class LpRel { Le, Ge, Eq };

template <class T>
struct LpRow {
    std::vector<T> coeffs;
    LpRel rel = LpRel::Le;
    T rhs{};
};

// min/max c'x subject to rows and box bounds lower <= x <= upper (upper optional).
template <class T>
struct LpProblem {
    LpSense sense = LpSense::Minimize;
    std::vector<T> objective;
    std::vector<LpRow<T>> rows;
    std::vector<T> lower;
    std::vector<std::optional<T>> upper;

    int add_variable(T cost, T lo, std::optional<T> hi) {
        objective.push_back(std::move(cost));
        lower.push_back(std::move(lo));
        upper.push_back(std::move(hi));
        return static_cast<int>(objective.size()) - 1;
    }
};

template <class T>
struct LpSolution {
    T objective{};
    std::vector<T> values;
};

namespace detail {

template <class T>
struct LpEps {
    static bool neg(const T& x) { return x < 0; }
    static bool pos(const T& x) { return x > 0; }
    static bool zero(const T& x) { return x == 0; }
};
template <>
struct LpEps<double> {
    static constexpr double eps = 1e-9;
    static bool neg(double x) { return x < -eps; }
    static bool pos(double x) { return x > eps; }
    static bool zero(double x) { return x > -eps && x < eps; }
};

// Primal simplex on the equality-form tableau with Bland's rule.
template <class T>
class Tableau {
public:
    // a: m x n equality system a x = b with b >= 0, basis: initial basic columns.
    Tableau(std::vector<std::vector<T>> a, std::vector<T> b, std::vector<int> basis, int n)
        : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)), n_(n) {}

    // Minimizes cost'x; cost has size n_. Returns the optimum.
    T minimize(const std::vector<T>& cost) {
        build_reduced(cost);
        while (true) {
            int enter = -1;
            for (int j = 0; j < n_; ++j) {
                if (LpEps<T>::neg(reduced_[static_cast<std::size_t>(j)])) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            }
            if (enter < 0) break;
            int leave = -1;
            for (std::size_t i = 0; i < a_.size(); ++i) {
                const T& aij = a_[i][static_cast<std::size_t>(enter)];
                if (!LpEps<T>::pos(aij)) continue;
                if (leave < 0) {
                    leave = static_cast<int>(i);
                    continue;
                }
                const auto li = static_cast<std::size_t>(leave);
                const T lhs = b_[i] * a_[li][static_cast<std::size_t>(enter)];
                const T rhs = b_[li] * aij;
                if (lhs < rhs ||
                    (lhs == rhs && basis_[i] < basis_[li])) {  // Bland on ties
                    leave = static_cast<int>(i);
                }
            }
            if (leave < 0) throw LpUnbounded();
            pivot(static_cast<std::size_t>(leave), enter);
        }
        T value{};
        for (std::size_t i = 0; i < a_.size(); ++i)
            value += cost[static_cast<std::size_t>(basis_[i])] * b_[i];
        return value;
    }

    std::vector<T> primal_values() const {
        std::vector<T> x(static_cast<std::size_t>(n_), T{});
        for (std::size_t i = 0; i < a_.size(); ++i) x[static_cast<std::size_t>(basis_[i])] = b_[i];
        return x;
    }

    const std::vector<int>& basis() const { return basis_; }

    // Pivot an artificial variable out of the basis when possible (degenerate row).
    void drive_out(int col_limit) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (basis_[i] < col_limit) continue;
            for (int j = 0; j < col_limit; ++j) {
                if (!LpEps<T>::zero(a_[i][static_cast<std::size_t>(j)])) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    void restrict_columns(int n) { n_ = n; }

private:
    void build_reduced(const std::vector<T>& cost) {
        reduced_.assign(static_cast<std::size_t>(n_), T{});
        for (int j = 0; j < n_; ++j) reduced_[static_cast<std::size_t>(j)] = cost[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const T& cb = cost[static_cast<std::size_t>(basis_[i])];
            if (LpEps<T>::zero(cb)) continue;
            for (int j = 0; j < n_; ++j)
                reduced_[static_cast<std::size_t>(j)] -= cb * a_[i][static_cast<std::size_t>(j)];
        }
    }

    void pivot(std::size_t row, int col) {
        const T p = a_[row][static_cast<std::size_t>(col)];
        for (auto& v : a_[row]) v /= p;
        b_[row] /= p;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == row) continue;
            const T f = a_[i][static_cast<std::size_t>(col)];
            if (LpEps<T>::zero(f)) continue;
            for (std::size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[row][j];
            b_[i] -= f * b_[row];
            if constexpr (std::is_same_v<T, double>) {
                a_[i][static_cast<std::size_t>(col)] = 0.0;
            }
        }
        if (!reduced_.empty()) {
            const T f = reduced_[static_cast<std::size_t>(col)];
            if (!LpEps<T>::zero(f)) {
                for (std::size_t j = 0; j < reduced_.size(); ++j)
                    reduced_[j] -= f * a_[row][j];
            }
        }
        basis_[row] = col;
    }

    std::vector<std::vector<T>> a_;
    std::vector<T> b_;
    std::vector<int> basis_;
    std::vector<T> reduced_;
    int n_;
};

}  // namespace detail

// Two-phase primal simplex with Bland's rule; exact for T = Rational, tolerance
// 1e-9 for T = double.
template <class T>
LpSolution<T> simplex_solve(const LpProblem<T>& problem) {
    const int nvars = static_cast<int>(problem.objective.size());
    // Shift x = lower + y with y >= 0; upper bounds become rows.
    std::vector<LpRow<T>> rows = problem.rows;
    for (int j = 0; j < nvars; ++j) {
        if (problem.upper[static_cast<std::size_t>(j)]) {
            LpRow<T> r;
            r.coeffs.assign(static_cast<std::size_t>(nvars), T{});
            r.coeffs[static_cast<std::size_t>(j)] = T(1);
            r.rel = LpRel::Le;
            r.rhs = *problem.upper[static_cast<std::size_t>(j)];
            rows.push_back(std::move(r));
        }
    }
    const std::size_t m = rows.size();
    // Equality form columns: y (nvars) + one slack/surplus per inequality.
    int ncols = nvars;
    std::vector<int> slack_col(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].rel != LpRel::Eq) slack_col[i] = ncols++;
    }
    std::vector<std::vector<T>> a(m, std::vector<T>(static_cast<std::size_t>(ncols), T{}));
    std::vector<T> b(m, T{});
    for (std::size_t i = 0; i < m; ++i) {
        T rhs = rows[i].rhs;
        for (int j = 0; j < nvars; ++j) {
            const T& c = rows[i].coeffs[static_cast<std::size_t>(j)];
            a[i][static_cast<std::size_t>(j)] = c;
            rhs -= c * problem.lower[static_cast<std::size_t>(j)];
        }
        if (slack_col[i] >= 0)
            a[i][static_cast<std::size_t>(slack_col[i])] = rows[i].rel == LpRel::Le ? T(1) : T(-1);
        b[i] = rhs;
        if (detail::LpEps<T>::neg(b[i])) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
    }
    // Artificials for rows without a usable identity column.
    std::vector<int> basis(m, -1);
    std::vector<std::size_t> needs_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        if (slack_col[i] >= 0 && detail::LpEps<T>::pos(a[i][static_cast<std::size_t>(slack_col[i])])) {
            basis[i] = slack_col[i];
        } else {
            needs_artificial.push_back(i);
        }
    }
    const int cols_no_art = ncols;
    for (std::size_t i : needs_artificial) {
        for (std::size_t r = 0; r < m; ++r) a[r].push_back(r == i ? T(1) : T{});
        basis[i] = ncols++;
    }
    detail::Tableau<T> tab(std::move(a), std::move(b), std::move(basis), ncols);
    if (!needs_artificial.empty()) {
        std::vector<T> phase1(static_cast<std::size_t>(ncols), T{});
        for (int j = cols_no_art; j < ncols; ++j) phase1[static_cast<std::size_t>(j)] = T(1);
        const T art_sum = tab.minimize(phase1);
        if (!detail::LpEps<T>::zero(art_sum)) throw LpInfeasible();
        tab.drive_out(cols_no_art);
        tab.restrict_columns(cols_no_art);
    } else {
        tab.restrict_columns(cols_no_art);
    }
    std::vector<T> cost(static_cast<std::size_t>(ncols), T{});
    const bool maximize = problem.sense == LpSense::Maximize;
    for (int j = 0; j < nvars; ++j)
        cost[static_cast<std::size_t>(j)] =
            maximize ? T(-problem.objective[static_cast<std::size_t>(j)])
                     : problem.objective[static_cast<std::size_t>(j)];
    T shifted = tab.minimize(cost);
    auto y = tab.primal_values();
    LpSolution<T> sol;
    sol.values.resize(static_cast<std::size_t>(nvars));
    T constant{};
    for (int j = 0; j < nvars; ++j) {
        sol.values[static_cast<std::size_t>(j)] =
            problem.lower[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j)];
        constant += problem.objective[static_cast<std::size_t>(j)] *
                    problem.lower[static_cast<std::size_t>(j)];
    }
    sol.objective = maximize ? T(constant - shifted) : T(constant + shifted);
    return sol;
}

// Float copy of an exact problem (for the tolerance-mode kernel).
inline LpProblem<double> to_float_problem(const LpProblem<Rational>& exact) {
    LpProblem<double> lp;
    lp.sense = exact.sense;
    for (std::size_t j = 0; j < exact.objective.size(); ++j) {
        std::optional<double> hi;
        if (exact.upper[j]) hi = to_double(*exact.upper[j]);
        lp.add_variable(to_double(exact.objective[j]), to_double(exact.lower[j]), hi);
    }
    for (const auto& row : exact.rows) {
        LpRow<double> r;
        r.rel = row.rel;
        r.rhs = to_double(row.rhs);
        for (const Rational& c : row.coeffs) r.coeffs.push_back(to_double(c));
        lp.rows.push_back(std::move(r));
    }
    return lp;
}

}  // namespace fgc
