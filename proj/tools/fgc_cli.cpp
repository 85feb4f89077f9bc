#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fgc/algorithms.hpp"
#include "fgc/analysis.hpp"
#include "fgc/bounds.hpp"
#include "fgc/cutlp.hpp"

namespace {

using namespace fgc;

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    const auto r = parse_rational(text);
    if (!r) throw CLI::ValidationError(what, "expected an integer or p/q rational");
    return *r;
}

Methods methods_from(const std::string& two_ecss, const std::string& wtap) {
    Methods m;
    if (two_ecss == "arb2x")
        m.two_ecss = TwoEcssMethod::Arborescence2x;
    else if (two_ecss == "mstaug")
        m.two_ecss = TwoEcssMethod::MstPlusAug;
    else if (two_ecss == "exact")
        m.two_ecss = TwoEcssMethod::Exact;
    else
        throw CLI::ValidationError("--two-ecss", "expected arb2x|mstaug|exact");
    if (wtap == "pd2x")
        m.wtap = WtapMethod::PrimalDual2x;
    else if (wtap == "exact")
        m.wtap = WtapMethod::Exact;
    else
        throw CLI::ValidationError("--wtap", "expected pd2x|exact");
    return m;
}

void print_solution_lines(const Solution& sol) {
    std::cout << serialize_solution(sol.edge_ids);
    std::cout << format_rational(sol.weight) << '\n';
}

int run_solve(const std::string& input, const std::string& algo, const std::string& alpha_text,
              const Methods& methods) {
    FgcInstance raw = parse_instance_file(input);
    auto [instance, twins] = augment_parallel_unsafe(raw);
    const Rational alpha = parse_rational_arg(alpha_text, "--alpha");
    if (alpha < 0 || alpha > 1) throw CLI::ValidationError("--alpha", "must be in [0,1]");
    Solution sol;
    if (algo == "a") {
        sol = algorithm_a(instance, methods);
    } else if (algo == "b") {
        sol = algorithm_b(instance, alpha, methods);
    } else if (algo == "c") {
        sol = algorithm_c(instance, alpha, methods);
    } else if (algo == "hybrid") {
        const RunReport report = hybrid(instance, methods);
        sol = report.best().solution;
    } else {
        throw CLI::ValidationError("--algo", "expected a|b|c|hybrid");
    }
    // Twin edges are artifacts of the augmentation; report original ids where a
    // twin was chosen (its source has the same endpoints and weight).
    EdgeSet original;
    for (int id : sol.edge_ids) {
        auto it = twins.find(id);
        original.insert(it == twins.end() ? id : it->second);
    }
    std::cout << serialize_solution(original);
    std::cout << format_rational(sol.weight) << '\n';
    return 0;
}

int run_report(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".fgc")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::cout << "instance,opt,A,bestB,bestC,hybrid,ratio\n";
    for (const auto& path : files) {
        FgcInstance raw = parse_instance_file(path.string());
        auto [instance, twins] = augment_parallel_unsafe(raw);
        const auto [opt_sol, opt] = exact_fgc(instance);
        const Methods methods;  // certified defaults
        const RunReport rep = hybrid(instance, methods);
        Rational a_cost, best_b, best_c;
        bool saw_b = false, saw_c = false;
        for (const auto& e : rep.entries) {
            if (e.name == "A") a_cost = e.solution.weight;
            if (e.name == "B" && (!saw_b || e.solution.weight < best_b)) {
                best_b = e.solution.weight;
                saw_b = true;
            }
            if (e.name == "C" && (!saw_c || e.solution.weight < best_c)) {
                best_c = e.solution.weight;
                saw_c = true;
            }
        }
        const Rational chosen = rep.best().solution.weight;
        std::cout << path.filename().string() << ',' << format_rational(opt) << ','
                  << format_rational(a_cost) << ',' << format_rational(best_b) << ','
                  << format_rational(best_c) << ',' << format_rational(chosen) << ','
                  << (opt > 0 ? format_decimal(to_double(chosen / opt)) : "inf") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flexible graph connectivity toolkit"};
    app.require_subcommand(1);

    std::string input, output, sol_file, algo = "hybrid", alpha_text = "1";
    std::string two_ecss = "arb2x", wtap = "pd2x", target_file;
    std::string lambda_text = "2", tau_text = "2", alphas_file, list_name = "regular";
    std::string kind_text = "random";
    int n = 0, m = 0, weight_bound = 10;
    std::uint64_t seed = 0;
    std::string safe_fraction_text = "1/2";
    bool analytic = false, two_algo = false, bounded = false, certificate = false;

    auto* solve = app.add_subcommand("solve", "run an approximation algorithm");
    solve->add_option("-i,--input", input)->required();
    solve->add_option("--algo", algo, "a|b|c|hybrid");
    solve->add_option("--alpha", alpha_text, "scaling factor for b/c");
    solve->add_option("--two-ecss", two_ecss, "arb2x|mstaug|exact");
    solve->add_option("--wtap", wtap, "pd2x|exact");

    auto* exact = app.add_subcommand("exact", "brute-force optimum");
    exact->add_option("-i,--input", input)->required();

    auto* check = app.add_subcommand("check", "verify a solution file");
    check->add_option("-i,--input", input)->required();
    check->add_option("-s,--solution", sol_file)->required();

    auto* thresholds_cmd = app.add_subcommand("thresholds", "per-edge threshold values");
    thresholds_cmd->add_option("-i,--input", input)->required();

    auto* bijection_cmd = app.add_subcommand("bijection", "alpha-MST to target exchange bijection");
    bijection_cmd->add_option("-i,--input", input)->required();
    bijection_cmd->add_option("--alpha", alpha_text);
    bijection_cmd->add_option("--target", target_file, "file of target tree edge ids")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "factor-revealing bound values");
    bounds_cmd->add_flag("--analytic", analytic);
    bounds_cmd->add_flag("--two-algo", two_algo);
    bounds_cmd->add_flag("--bounded-lp", bounded);
    bounds_cmd->add_option("--lambda", lambda_text);
    bounds_cmd->add_option("--tau", tau_text);
    bounds_cmd->add_option("--alphas", alphas_file, "file with one alpha per line");
    bounds_cmd->add_option("--list", list_name, "printed|regular fixture list");
    bounds_cmd->add_flag("--certificate", certificate, "print the LP certificate");

    auto* generate = app.add_subcommand("generate", "write a random instance");
    generate->add_option("--kind", kind_text, "random|mst|2ecss|wtap");
    generate->add_option("-n", n)->required();
    generate->add_option("-m", m)->required();
    generate->add_option("--max-weight", weight_bound);
    generate->add_option("--safe-fraction", safe_fraction_text);
    generate->add_option("--seed", seed);
    generate->add_option("-o,--output", output)->required();

    auto* lp_export = app.add_subcommand("lp-export", "write the cut ILP in LP format");
    lp_export->add_option("-i,--input", input)->required();
    lp_export->add_option("-o,--output", output)->required();

    auto* report = app.add_subcommand("report", "CSV ratio table over a directory");
    report->add_option("-i,--input", input, "directory of .fgc files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(input, algo, alpha_text, methods_from(two_ecss, wtap));
        if (exact->parsed()) {
            FgcInstance instance = parse_instance_file(input);
            const auto [sol, weight] = exact_fgc(instance);
            std::cout << format_rational(weight) << '\n';
            return 0;
        }
        if (check->parsed()) {
            FgcInstance instance = parse_instance_file(input);
            const Solution sol = Solution::of(instance, parse_solution_file(sol_file));
            const auto witness = explain_infeasible(instance, sol);
            if (!witness) {
                std::cout << "feasible " << format_rational(sol.weight) << '\n';
                return 0;
            }
            std::cout << "infeasible:";
            if (witness->disconnected) {
                std::cout << " disconnected; one side of the cut:";
            } else {
                std::cout << " removal of unsafe edge(s)";
                for (int id : witness->failing_unsafe) std::cout << ' ' << id;
                std::cout << " disconnects; one side of the violated cut:";
            }
            for (int v : witness->cut_side) std::cout << ' ' << v;
            std::cout << '\n';
            return 1;
        }
        if (thresholds_cmd->parsed()) {
            FgcInstance raw = parse_instance_file(input);
            auto [instance, twins] = augment_parallel_unsafe(raw);
            std::cout << compute_thresholds(instance).serialize();
            return 0;
        }
        if (bijection_cmd->parsed()) {
            FgcInstance instance = parse_instance_file(input);
            const Rational alpha = parse_rational_arg(alpha_text, "--alpha");
            SpanningTree target;
            target.edge_ids = parse_solution_file(target_file);
            const SpanningTree source = alpha_mst(instance, alpha);
            const ExchangeBijection b = exchange_bijection(instance.graph(), source, target);
            const bool valid = is_valid_exchange_bijection(instance.graph(), b);
            const bool monotone = verify_alpha_monotone(instance.graph(), b, alpha);
            for (const auto& [s, t] : b.mapping) std::cout << s << " -> " << t << '\n';
            std::cout << "valid: " << (valid ? "yes" : "no")
                      << ", alpha-monotone: " << (monotone ? "yes" : "no") << '\n';
            return valid ? 0 : 1;
        }
        if (bounds_cmd->parsed()) {
            const Rational lambda = parse_rational_arg(lambda_text, "--lambda");
            const Rational tau = parse_rational_arg(tau_text, "--tau");
            if (analytic) {
                std::cout << format_decimal(analytic_bound(lambda)) << '\n';
            }
            if (two_algo) {
                const TwoAlgoBound b = two_algo_bound_branches(lambda, tau);
                std::cout << format_decimal(b.value) << " (branches " << format_decimal(b.first_branch)
                          << ", " << format_decimal(b.second_branch) << ")\n";
            }
            if (bounded) {
                BoundProgram program;
                program.lambda = lambda;
                program.tau = tau;
                if (!alphas_file.empty()) {
                    std::ifstream in(alphas_file);
                    if (!in) throw IoError("cannot open alpha list: " + alphas_file);
                    std::string line;
                    while (std::getline(in, line)) {
                        if (line.empty() || line[0] == '#') continue;
                        program.alphas.push_back(parse_rational_arg(line, "--alphas"));
                    }
                } else {
                    program.alphas = list_name == "printed" ? alpha_list_printed() : alpha_list_regular();
                }
                const BoundCertificate cert = bounded_weight_lp(program);
                std::cout << format_decimal(to_double(cert.value)) << " ("
                          << format_rational(cert.value) << ")\n";
                if (certificate) std::cout << cert.serialize();
            }
            if (!analytic && !two_algo && !bounded)
                throw CLI::ValidationError("bounds", "pick --analytic, --two-algo or --bounded-lp");
            return 0;
        }
        if (generate->parsed()) {
            InstanceKind kind;
            if (kind_text == "random")
                kind = InstanceKind::Random;
            else if (kind_text == "mst")
                kind = InstanceKind::MstCase;
            else if (kind_text == "2ecss")
                kind = InstanceKind::TwoEcssCase;
            else if (kind_text == "wtap")
                kind = InstanceKind::WtapCase;
            else
                throw CLI::ValidationError("--kind", "expected random|mst|2ecss|wtap");
            const Rational sf = parse_rational_arg(safe_fraction_text, "--safe-fraction");
            const FgcInstance inst = generate_instance(kind, n, m, weight_bound, sf, seed);
            std::ofstream out(output);
            if (!out) throw IoError("cannot open output: " + output);
            out << serialize_instance(inst);
            return 0;
        }
        if (lp_export->parsed()) {
            export_ilp(parse_instance_file(input), output);
            return 0;
        }
        if (report->parsed()) return run_report(input);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
