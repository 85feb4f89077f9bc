// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "fgc/analysis.hpp"
#include "fgc/bounds.hpp"
#include "fgc/cutlp.hpp"

using namespace fgc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail,
            double seconds) {
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << " (" << name << "): " << detail
         << " [" << std::fixed;
    line.precision(2);
    line << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

template <class F>
void criterion(int number, const std::string& name, F body) {
    const auto start = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    report(number, name, ok, detail, std::chrono::duration<double>(Clock::now() - start).count());
}

FgcInstance load(const char* name) {
    return parse_instance_file(std::string(FGC_TEST_DATA) + "/" + name);
}

struct SuiteInstance {
    FgcInstance augmented;
    Rational opt;
    Solution opt_solution;
};

// The shared random suite: mixed generators, unit and [1,5] weights, n <= 8,
// augmented size <= 14 so the oracle stays fast.
std::vector<SuiteInstance> build_suite(int target) {
    std::vector<SuiteInstance> out;
    std::uint64_t seed = 1;
    while (static_cast<int>(out.size()) < target) {
        ++seed;
        const InstanceKind kind = static_cast<InstanceKind>(seed % 4);
        const int n = 3 + static_cast<int>(seed % 5);       // 3..7
        const int m = n + 1 + static_cast<int>(seed % 3);   // sparse
        const int max_w = (seed % 2) ? 1 : 5;
        FgcInstance raw = generate_instance(kind, n, m, max_w, Rational(1, 2), seed);
        auto [aug, twins] = augment_parallel_unsafe(raw);
        if (aug.edge_count() > 14) continue;
        auto [sol, w] = exact_fgc(aug);
        out.push_back(SuiteInstance{std::move(aug), std::move(w), std::move(sol)});
    }
    return out;
}

}  // namespace

int main() {
    std::vector<SuiteInstance> suite;

    criterion(1, "integrality gap fixture", [&](bool& ok) {
        const FgcInstance fig3 = load("fig3.fgc");
        const Rational opt = exact_fgc(fig3).second;
        const Rational lp = lp_relaxation(fig3).second;
        ok = opt == 2 && lp == Rational(3, 4);
        std::ostringstream d;
        d << "exact=" << format_rational(opt) << " lp=" << format_rational(lp) << " gap="
          << format_rational(opt / lp) << " (want 2, 3/4, 8/3)";
        return d.str();
    });

    criterion(2, "analytic bound", [&](bool& ok) {
        const double b = analytic_bound(Rational(2));
        ok = b > 2.5223 && b < 2.5225 && b < 2.523;
        for (int n : {1, 2, 5}) {
            const EqMaxResult r = eq_max_value(Rational(2), n);
            ok = ok && std::abs(r.value - b) < 1e-6;
        }
        std::ostringstream d;
        d << "analytic(2)=" << format_decimal(b, 8) << ", eq-max agrees for N in {1,2,5}";
        return d.str();
    });

    criterion(3, "two-algorithm bound", [&](bool& ok) {
        const double v = two_algo_bound(Rational(2), Rational(2));
        ok = std::abs(v - 2.8) <= 1e-9;
        std::ostringstream d;
        d << "two_algo(2,2)=" << format_decimal(v, 10) << " (want 14/5)";
        return d.str();
    });

    criterion(4, "bounded-weight LP", [&](bool& ok) {
        BoundProgram p;
        p.lambda = Rational(2);
        p.tau = Rational(3, 2);
        p.alphas = alpha_list_regular();
        const double v = to_double(bounded_weight_lp(p).value);
        ok = v >= 2.4030 && v <= 2.4040;
        std::ostringstream d;
        d << "value=" << format_decimal(v, 9) << " on the 61-point list (want within [2.4030, 2.4040])";
        return d.str();
    });

    suite = build_suite(300);

    criterion(5, "oracle-ratio suite", [&](bool& ok) {
        int checked = 0;
        double worst_hybrid_cert = 0, worst_hybrid_exact = 0, worst_a = 0;
        ok = true;
        for (const SuiteInstance& s : suite) {
            const RunReport cert = hybrid(s.augmented, Methods{});
            const RunReport exact = hybrid(s.augmented, Methods::exact());
            for (const auto& e : cert.entries) ok = ok && is_feasible(s.augmented, e.solution);
            for (const auto& e : exact.entries) ok = ok && is_feasible(s.augmented, e.solution);
            if (s.opt > 0) {
                const double rc = to_double(cert.best().solution.weight / s.opt);
                const double re = to_double(exact.best().solution.weight / s.opt);
                worst_hybrid_cert = std::max(worst_hybrid_cert, rc);
                worst_hybrid_exact = std::max(worst_hybrid_exact, re);
                ok = ok && rc <= 2.523 && re <= 1.5 + 1e-12;
                // Algorithm A with exact 2-ECSS against (2 + 2 delta) * OPT
                const Solution a = algorithm_a(s.augmented, Methods::exact());
                const Rational delta = decompose(s.augmented, s.opt_solution).delta;
                const Rational bound = (Rational(2) + 2 * delta) * s.opt;
                ok = ok && a.weight <= bound;
                if (bound > 0) worst_a = std::max(worst_a, to_double(a.weight / bound));
            }
            ++checked;
        }
        std::ostringstream d;
        d << checked << " instances; worst hybrid/OPT: certified=" << format_decimal(worst_hybrid_cert)
          << " (<=2.523), exact=" << format_decimal(worst_hybrid_exact)
          << " (<=1.5); worst A/(2+2delta)OPT=" << format_decimal(worst_a) << " (<=1)";
        return d.str();
    });

    criterion(6, "lemma verification", [&](bool& ok) {
        int verified = 0, skipped = 0, violations = 0, printed_checked = 0, printed_skipped = 0;
        for (const SuiteInstance& s : suite) {
            if (s.opt == 0) {
                ++skipped;
                continue;
            }
            const LemmaReport rep = verify_lemma_bounds(s.augmented, s.opt_solution,
                                                        Methods::exact(), Rational(1), Rational(1));
            if (!rep.applicable) {
                ++skipped;
                continue;
            }
            ++verified;
            violations += rep.violations();
            if (rep.parametrized_applicable)
                ++printed_checked;
            else
                ++printed_skipped;
        }
        ok = violations == 0 && verified >= 250;
        std::ostringstream d;
        d << verified << " instances verified with zero violations expected: got " << violations
          << "; constructive charging bounds on all, printed bucket forms on " << printed_checked
          << " (" << printed_skipped << " skipped: tie-degenerate bucket windows)";
        return d.str();
    });

    criterion(7, "threshold and bijection properties", [&](bool& ok) {
        ok = true;
        int chains = 0;
        for (std::size_t idx = 0; idx < suite.size(); idx += 3) {
            const SuiteInstance& s = suite[idx];
            const ThresholdSet ts = compute_thresholds(s.augmented);
            ok = ok && static_cast<int>(ts.values.size()) <= s.augmented.vertex_count() - 1;
            // chain to a spanning tree of the optimum
            UnionFind uf(s.augmented.vertex_count());
            SpanningTree target;
            for (int id : s.opt_solution.edge_ids) {
                const Edge& e = s.augmented.graph().edge(id);
                if (uf.unite(e.u, e.v)) target.edge_ids.insert(id);
            }
            const auto alphas = ts.scaling_set();
            const auto chain = chain_exchange_bijections(s.augmented, alphas, target);
            ++chains;
            for (std::size_t i = 0; i < chain.size(); ++i) {
                ok = ok && is_valid_exchange_bijection(s.augmented.graph(), chain[i], false);
                ok = ok && verify_alpha_monotone_scaled(s.augmented.graph(), chain[i], alphas[i]);
                if (alphas[i] > 0)
                    ok = ok && verify_alpha_monotone(s.augmented.graph(), chain[i], alphas[i]);
                if (i > 0) {
                    for (const auto& [src, dst] : chain[i - 1].mapping) {
                        if (!chain[i].source.count(src)) continue;
                        // keeping a pair whose swap went invalid is impossible
                        if (src != dst &&
                            !is_valid_swap(s.augmented.graph(), chain[i].source, src, dst))
                            continue;
                        ok = ok && chain[i].mapping.at(src) == dst;
                    }
                }
            }
        }
        std::ostringstream d;
        d << chains << " chains checked: bijectivity, swap-validity, alpha-monotonicity, "
          << "consecutive agreement; pruned thresholds <= |V|-1 throughout";
        return d.str();
    });

    criterion(8, "unweighted k-FGC", [&](bool& ok) {
        ok = true;
        int checked = 0, by_k[3] = {0, 0, 0};
        double worst = 0;
        for (std::uint64_t seed = 1; seed < 4000 && checked < 60; ++seed) {
            const int k = 1 + static_cast<int>(seed % 2);
            const int n = 3 + static_cast<int>(seed % 3);
            const int m = std::min(14, n + k + 1 + static_cast<int>(seed % 4));
            FgcInstance raw = generate_instance(
                seed % 3 == 0 ? InstanceKind::TwoEcssCase : InstanceKind::Random, n, m, 1,
                Rational(1, 3), seed * 77);
            LabeledMultigraph copy(raw.graph().vertex_count());
            for (const Edge& e : raw.graph().edges()) copy.add_edge(e.u, e.v, e.weight, e.safety);
            std::optional<FgcInstance> inst;
            try {
                inst.emplace(std::move(copy), k);
            } catch (const InstanceError&) {
                continue;  // not (k+1)-edge connectable; not a valid k-FGC instance
            }
            const auto [opt, w] = exact_fgc(*inst);
            const Solution with_oracle = kfgc_unweighted(*inst, Methods::exact());
            Methods heuristic;
            heuristic.exact_kecss = false;
            const Solution with_heuristic = kfgc_unweighted(*inst, heuristic);
            ok = ok && is_feasible(*inst, with_oracle) && is_feasible(*inst, with_heuristic);
            // guarantee formula theta*(2k+1)/(2k+2) + 1/(k+1); at theta=1 this is
            // (2k+3)/(2k+2), i.e. 5/4 for k=1 and 7/6 for k=2
            const Rational at_exact = Rational(2 * k + 3, 2 * k + 2);
            ok = ok && Rational(static_cast<long>(with_oracle.edge_ids.size())) <= at_exact * w;
            // measured theta of the heuristic (k+1)-ECSS on the contraction
            UnionFind forest_uf(inst->vertex_count());
            long forest = 0;
            for (const Edge& e : inst->graph().edges()) {
                if (e.safe() && forest_uf.unite(e.u, e.v)) ++forest;
            }
            const long y_exact = static_cast<long>(with_oracle.edge_ids.size()) - forest;
            const long y_heur = static_cast<long>(with_heuristic.edge_ids.size()) - forest;
            const Rational theta = y_exact > 0 ? Rational(y_heur, y_exact) : Rational(1);
            const Rational at_theta = theta * Rational(2 * k + 1, 2 * k + 2) + Rational(1, k + 1);
            ok = ok && Rational(static_cast<long>(with_heuristic.edge_ids.size())) <= at_theta * w;
            if (w > 0)
                worst = std::max(
                    worst, to_double(Rational(static_cast<long>(with_oracle.edge_ids.size())) / w));
            ++checked;
            ++by_k[k];
        }
        ok = ok && by_k[1] >= 10 && by_k[2] >= 10;
        std::ostringstream d;
        d << checked << " instances (" << by_k[1] << " with k=1, " << by_k[2]
          << " with k=2); worst oracle-size/OPT=" << format_decimal(worst)
          << "; bounds (2k+3)/(2k+2) and the measured-theta formula held";
        return d.str();
    });

    criterion(9, "figure fixture", [&](bool& ok) {
        const FgcInstance fig1 = load("fig1.fgc");
        const auto [sol, w] = exact_fgc(fig1);
        ok = w == 17 && sol.edge_ids == EdgeSet{0, 1, 2, 3, 6, 7, 8};
        std::ostringstream d;
        d << "weight=" << format_rational(w) << " edges=" << serialize_solution(sol.edge_ids);
        std::string text = d.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
        return text + " (want 17 with the known optimal set)";
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
