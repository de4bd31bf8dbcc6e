#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sincfred/bench.hpp"
#include "sincfred/collocation.hpp"
#include "sincfred/problems.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

std::vector<sincfred::MethodKind> parse_methods(const std::vector<std::string>& names) {
    std::vector<sincfred::MethodKind> methods;
    for (const auto& name : names) {
        const auto m = sincfred::parse_method(name);
        if (!m) {
            throw CLI::ValidationError("--methods", "unknown method '" + name + "'");
        }
        methods.push_back(*m);
    }
    return methods;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sinc-collocation solvers for Fredholm integral equations of the second kind"};
    app.require_subcommand(1);

    const std::vector<std::string> method_names = {"orig-se", "orig-de",    "new-se",
                                                   "new-de",  "nystrom-se", "nystrom-de"};

    auto* bench = app.add_subcommand("bench", "Convergence sweep over N, written as CSV");
    int bench_example = 0;
    std::vector<std::string> bench_methods;
    int n_min = 0;
    int n_max = 0;
    int n_step = 1;
    int grid = sincfred::kDefaultGrid;
    bool count_evals = false;
    std::string out_path;
    bench->add_option("--example", bench_example, "Example number")
        ->required()
        ->check(CLI::Range(1, 4));
    bench->add_option("--methods", bench_methods, "Methods (comma separated)")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(method_names));
    bench->add_option("--n-min", n_min, "Smallest N")->required()->check(CLI::PositiveNumber);
    bench->add_option("--n-max", n_max, "Largest N")->required()->check(CLI::PositiveNumber);
    bench->add_option("--n-step", n_step, "Step in N")->check(CLI::PositiveNumber);
    bench->add_option("--grid", grid, "Evaluation grid size")->check(CLI::Range(2, 10000000));
    bench->add_flag("--count-kernel-evals", count_evals, "Count kernel evaluations in assembly");
    bench->add_option("--out", out_path, "Output CSV file (default stdout)");

    auto* solve = app.add_subcommand("solve", "Solve once and evaluate at one point");
    int solve_example = 0;
    std::string solve_method;
    int solve_n = 0;
    double at = 0.0;
    solve->add_option("--example", solve_example, "Example number")
        ->required()
        ->check(CLI::Range(1, 4));
    solve->add_option("--method", solve_method, "Method")
        ->required()
        ->check(CLI::IsMember(method_names));
    solve->add_option("--n", solve_n, "N")->required()->check(CLI::PositiveNumber);
    solve->add_option("--at", at, "Evaluation point t in [a, b]")->required();

    try {
        app.parse(argc, argv);
        if (bench->parsed() && n_min > n_max) {
            throw CLI::ValidationError("--n-min", "must not exceed --n-max");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (bench->parsed()) {
        const sincfred::Problem problem = sincfred::example_by_id(bench_example);
        std::vector<int> n_list;
        for (int n = n_min; n <= n_max; n += n_step) {
            n_list.push_back(n);
        }
        const auto methods = parse_methods(bench_methods);
        const auto records = sincfred::run_convergence(
            problem, methods, n_list, {.grid_size = grid, .count_kernel_evals = count_evals});
        if (out_path.empty()) {
            sincfred::write_csv(std::cout, records);
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open " << out_path << '\n';
                return kExitUsage;
            }
            sincfred::write_csv(out, records);
        }
        for (const auto& r : records) {
            if (r.failed()) {
                return kExitSingular;
            }
        }
        return 0;
    }

    const sincfred::Problem problem = sincfred::example_by_id(solve_example);
    const sincfred::Interval& iv = problem.interval;
    if (!(at >= iv.a() && at <= iv.b())) {
        std::cerr << "error: --at must lie in [" << iv.a() << ", " << iv.b() << "]\n";
        return kExitUsage;
    }
    const auto method = *sincfred::parse_method(solve_method);
    try {
        const auto sol = sincfred::solve(problem, method, solve_n);
        const double approx = sol.evaluate(at);
        std::cout << "t=" << sincfred::format_double(at)
                  << " approx=" << sincfred::format_double(approx);
        if (problem.exact) {
            const double exact = (*problem.exact)(at);
            std::cout << " exact=" << sincfred::format_double(exact)
                      << " error=" << sincfred::format_double(std::abs(exact - approx));
        }
        std::cout << '\n';
    } catch (const sincfred::SolveError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSingular;
    }
    return 0;
}
