#include "fgc/cutlp.hpp"

#include <fstream>
#include <sstream>

namespace fgc {

namespace {

void check_size(const FgcInstance& instance) {
    if (instance.vertex_count() > 16)
        throw TooLarge("cut enumeration needs n <= 16, got " +
                          std::to_string(instance.vertex_count()));
}

}  // namespace

LpProblem<Rational> build_cut_lp(const FgcInstance& instance) {
    check_size(instance);
    const LabeledMultigraph& g = instance.graph();
    const int n = g.vertex_count();
    const int m = g.edge_count();
    LpProblem<Rational> lp;
    lp.sense = LpSense::Minimize;
    for (int j = 0; j < m; ++j)
        lp.add_variable(g.edge(j).weight, Rational(0), Rational(1));
    // S runs over nonempty subsets of V \ {vertex n-1}; each proper cut appears
    // once with the side avoiding the last vertex as representative.
    const std::uint32_t limit = 1u << (n - 1);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        LpRow<Rational> row;
        row.coeffs.assign(static_cast<std::size_t>(m), Rational(0));
        row.rel = LpRel::Ge;
        row.rhs = Rational(2);
        for (const Edge& e : g.edges()) {
            const bool iu = e.u < n - 1 && (mask >> e.u & 1u);
            const bool iv = e.v < n - 1 && (mask >> e.v & 1u);
            if (iu != iv) row.coeffs[static_cast<std::size_t>(e.id)] = e.safe() ? 2 : 1;
        }
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

std::pair<std::vector<Rational>, Rational> lp_relaxation(const FgcInstance& instance) {
    const LpProblem<Rational> lp = build_cut_lp(instance);
    LpSolution<Rational> sol = simplex_solve(lp);
    return {std::move(sol.values), std::move(sol.objective)};
}

std::string ilp_text(const FgcInstance& instance) {
    check_size(instance);
    const LabeledMultigraph& g = instance.graph();
    const int n = g.vertex_count();
    std::ostringstream out;
    auto num = [](const Rational& r) {
        if (denominator(r) == 1) {
            std::ostringstream s;
            s << numerator(r);
            return s.str();
        }
        return format_decimal(to_double(r), 17);
    };
    out << "Minimize\n obj:";
    bool first = true;
    for (const Edge& e : g.edges()) {
        out << (first ? " " : " + ") << num(e.weight) << " x" << e.id;
        first = false;
    }
    out << "\nSubject To\n";
    const std::uint32_t limit = 1u << (n - 1);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        out << " cut" << mask << ":";
        bool any = false;
        for (const Edge& e : g.edges()) {
            const bool iu = e.u < n - 1 && (mask >> e.u & 1u);
            const bool iv = e.v < n - 1 && (mask >> e.v & 1u);
            if (iu != iv) {
                out << (any ? " + " : " ") << (e.safe() ? "2 x" : "x") << e.id;
                any = true;
            }
        }
        if (!any) out << " 0 x0";
        out << " >= 2\n";
    }
    out << "Binaries\n";
    for (const Edge& e : g.edges()) out << " x" << e.id;
    out << "\nEnd\n";
    return out.str();
}

void export_ilp(const FgcInstance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << ilp_text(instance);
    if (!out) throw IoError("failed writing: " + path);
}

}  // namespace fgc
