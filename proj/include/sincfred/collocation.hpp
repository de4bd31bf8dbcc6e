#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sincfred/dense.hpp"
#include "sincfred/problems.hpp"
#include "sincfred/transform.hpp"

namespace sincfred {

enum class MethodKind { OriginalSE, OriginalDE, NewSE, NewDE, NystromSE, NystromDE };

/// CLI spelling: orig-se, orig-de, new-se, new-de, nystrom-se, nystrom-de.
std::string_view to_string(MethodKind method);
std::optional<MethodKind> parse_method(std::string_view name);

TransformKind transform_kind(MethodKind method);
bool is_original(MethodKind method);
bool is_nystrom(MethodKind method);

/// Plan for the problem's smoothness parameters of the given kind.
DiscretizationPlan plan_for(const Problem& problem, TransformKind kind, int n);

struct LinearSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
};

/// Thrown when an assembled entry is not finite; the message names (i, j).
class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// a, psi(-Nh), ..., psi(Nh), b.
std::vector<double> collocation_points_original(const DiscretizationPlan& plan);

/// (E_n - K_n) u = g_n with n = 2N+3. Unknowns ordered
/// u_{-N-1}, u_{-N}, ..., u_N, u_{N+1}.
/// Uses exactly 3(2N+3)(2N+1) kernel evaluations.
LinearSystem assemble_original(const Problem& problem, const DiscretizationPlan& plan,
                               KernelCounter* counter = nullptr);

/// (I_m - K~_m) u~ = g~ with m = 2N+1 on the nodes psi(ih).
/// Uses exactly (2N+1)^2 kernel evaluations.
LinearSystem assemble_new(const Problem& problem, const DiscretizationPlan& plan,
                          KernelCounter* counter = nullptr);

/// Closed-form kernel-evaluation counts of the two assemblies.
std::uint64_t original_kernel_evals(int n);
std::uint64_t new_kernel_evals(int n);

class SolveError : public std::runtime_error {
public:
    enum class Cause { Singular, InvalidMesh, Assembly };

    SolveError(MethodKind method, int n, Cause cause, const std::string& what);

    MethodKind method() const { return method_; }
    int n() const { return n_; }
    Cause cause() const { return cause_; }

private:
    MethodKind method_;
    int n_;
    Cause cause_;
};

/// Evaluable approximate solution.
///
/// coeffs layout:
///   Original*: u_{-N-1}, u_{-N}, ..., u_N, u_{N+1}   (2N+3)
///   New*, Nystrom*: u~_{-N}, ..., u~_N = v_N(psi(jh))  (2N+1)
class SincSolution {
public:
    SincSolution(MethodKind method, DiscretizationPlan plan, std::vector<double> coeffs,
                 std::shared_ptr<const Problem> problem = nullptr);

    MethodKind method() const { return method_; }
    const DiscretizationPlan& plan() const { return plan_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// ||A x - b||_inf and its scale for the system that produced coeffs;
    /// populated by solve().
    double residual() const { return residual_; }
    double residual_scale() const { return scale_; }
    void set_residual(double residual, double scale) {
        residual_ = residual;
        scale_ = scale;
    }

    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }

private:
    double evaluate_sinc(double t) const;
    double evaluate_nystrom(double t) const;

    MethodKind method_;
    DiscretizationPlan plan_;
    std::vector<double> coeffs_;
    // Sinc-series coefficients for j = -N..N, with the omega corrections
    // already applied for New*.
    std::vector<double> series_;
    double left_ = 0.0;
    double right_ = 0.0;
    std::shared_ptr<const Problem> problem_;
    double residual_ = 0.0;
    double scale_ = 0.0;
};

/// Builds the plan, assembles, solves and wraps the coefficients.
/// Throws SolveError (method and N attached) on a singular system or an
/// invalid mesh.
SincSolution solve(const Problem& problem, MethodKind method, int n,
                   KernelCounter* counter = nullptr);

/// Wraps a solved coefficient vector; the Nystrom evaluator keeps a copy
/// of the problem.
SincSolution make_solution(const Problem& problem, MethodKind method,
                           const DiscretizationPlan& plan, std::vector<double> coeffs);

double evaluate(const SincSolution& sol, double t);

}  // namespace sincfred
