#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sincfred/collocation.hpp"
#include "sincfred/problems.hpp"

namespace sincfred {

inline constexpr int kDefaultGrid = 1001;
inline constexpr std::string_view kCsvHeader =
    "method,example,N,h,max_error,assemble_ms,solve_ms,eval_ms,kernel_evals";

/// One benchmark row. max_error is +inf when the solve failed;
/// kernel_evals counts assembly-time kernel calls and is 0 unless
/// counting was requested.
struct ConvergenceRecord {
    MethodKind method;
    std::string example;
    int n;
    double h;
    double max_error;
    double assemble_ms;
    double solve_ms;
    double eval_ms;
    std::uint64_t kernel_evals;

    bool failed() const;
};

struct BenchOptions {
    int grid_size = kDefaultGrid;
    bool count_kernel_evals = false;
};

/// Sup over grid_size equispaced points of [a, b] (endpoints included)
/// of |exact(t) - sol(t)|.
double max_error(const SincSolution& sol, const ScalarFunction& exact, int grid_size);

/// Equispaced grid on [a, b] with both endpoints.
std::vector<double> uniform_grid(const Interval& iv, int grid_size);

/// One record per (method, N), method-major in input order. Failed
/// solves produce a record with max_error = +inf and a warning on
/// stderr.
std::vector<ConvergenceRecord> run_convergence(const Problem& problem,
                                               const std::vector<MethodKind>& methods,
                                               const std::vector<int>& n_list,
                                               const BenchOptions& options = {});

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);
/// Milliseconds with three decimals.
std::string format_ms(double ms);

std::string to_csv_row(const ConvergenceRecord& r);
void write_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records);

/// Parses one data row; throws std::invalid_argument on malformed input.
ConvergenceRecord parse_csv_row(std::string_view line);
/// Parses a whole file including the header line.
std::vector<ConvergenceRecord> read_csv(std::istream& in);

}  // namespace sincfred
