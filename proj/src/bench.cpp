#include "sincfred/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "sincfred/sinc_basis.hpp"

namespace sincfred {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from, Clock::time_point to) {
    return std::chrono::duration<double, std::milli>(to - from).count();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_double(std::string_view s) {
    if (s == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("CSV: bad real field '" + std::string(s) + "'");
    }
    return v;
}

template <typename Int>
Int parse_int(std::string_view s) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("CSV: bad integer field '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

bool ConvergenceRecord::failed() const {
    return std::isinf(max_error);
}

std::vector<double> uniform_grid(const Interval& iv, int grid_size) {
    if (grid_size < 2) {
        throw std::invalid_argument("uniform_grid: grid_size must be at least 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(grid_size));
    const double step = iv.length() / (grid_size - 1);
    for (int i = 0; i < grid_size; ++i) {
        grid[static_cast<std::size_t>(i)] = iv.a() + i * step;
    }
    grid.back() = iv.b();
    return grid;
}

double max_error(const SincSolution& sol, const ScalarFunction& exact, int grid_size) {
    double worst = 0.0;
    for (double t : uniform_grid(sol.plan().interval(), grid_size)) {
        worst = std::max(worst, std::abs(exact(t) - sol.evaluate(t)));
    }
    return worst;
}

std::vector<ConvergenceRecord> run_convergence(const Problem& problem,
                                               const std::vector<MethodKind>& methods,
                                               const std::vector<int>& n_list,
                                               const BenchOptions& options) {
    if (methods.empty() || n_list.empty()) {
        throw std::invalid_argument("run_convergence: empty method or N list");
    }
    if (!problem.exact) {
        throw std::invalid_argument("run_convergence: problem has no exact solution");
    }
    std::vector<ConvergenceRecord> records;
    records.reserve(methods.size() * n_list.size());
    for (MethodKind method : methods) {
        for (int n : n_list) {
            ConvergenceRecord rec{method, problem.name, n, 0.0,
                                  std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0, 0};
            KernelCounter counter;
            KernelCounter* counter_ptr = options.count_kernel_evals ? &counter : nullptr;
            try {
                const auto t0 = Clock::now();
                const DiscretizationPlan plan = plan_for(problem, transform_kind(method), n);
                rec.h = plan.h();
                LinearSystem sys = is_original(method)
                                       ? assemble_original(problem, plan, counter_ptr)
                                       : assemble_new(problem, plan, counter_ptr);
                const auto t1 = Clock::now();
                std::vector<double> x = solve_dense(sys.matrix, sys.rhs);
                const auto t2 = Clock::now();
                const SincSolution sol = make_solution(problem, method, plan, std::move(x));
                rec.max_error = max_error(sol, *problem.exact, options.grid_size);
                const auto t3 = Clock::now();
                rec.assemble_ms = elapsed_ms(t0, t1);
                rec.solve_ms = elapsed_ms(t1, t2);
                rec.eval_ms = elapsed_ms(t2, t3);
            } catch (const std::exception& e) {
                std::cerr << "warning: example " << problem.name << ", " << to_string(method)
                          << ", N=" << n << ": " << e.what() << '\n';
                rec.max_error = std::numeric_limits<double>::infinity();
            }
            rec.kernel_evals = counter.count();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string to_csv_row(const ConvergenceRecord& r) {
    std::string row;
    row += to_string(r.method);
    row += ',';
    row += r.example;
    row += ',';
    row += std::to_string(r.n);
    row += ',';
    row += format_double(r.h);
    row += ',';
    row += format_double(r.max_error);
    row += ',';
    row += format_ms(r.assemble_ms);
    row += ',';
    row += format_ms(r.solve_ms);
    row += ',';
    row += format_ms(r.eval_ms);
    row += ',';
    row += std::to_string(r.kernel_evals);
    return row;
}

void write_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << to_csv_row(r) << '\n';
    }
}

ConvergenceRecord parse_csv_row(std::string_view line) {
    const auto f = split(line, ',');
    if (f.size() != 9) {
        throw std::invalid_argument("CSV: expected 9 fields, got " + std::to_string(f.size()));
    }
    const auto method = parse_method(f[0]);
    if (!method) {
        throw std::invalid_argument("CSV: unknown method '" + std::string(f[0]) + "'");
    }
    return ConvergenceRecord{
        *method,
        std::string(f[1]),
        parse_int<int>(f[2]),
        parse_double(f[3]),
        parse_double(f[4]),
        parse_double(f[5]),
        parse_double(f[6]),
        parse_double(f[7]),
        parse_int<std::uint64_t>(f[8]),
    };
}

std::vector<ConvergenceRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::invalid_argument("CSV: missing or unexpected header");
    }
    std::vector<ConvergenceRecord> records;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            records.push_back(parse_csv_row(line));
        }
    }
    return records;
}

}  // namespace sincfred
