#include "sincfred/collocation.hpp"

#include <cmath>
#include <stdexcept>

#include "sincfred/sinc_basis.hpp"

namespace sincfred {

namespace {

class CountedKernel {
public:
    CountedKernel(const Kernel& kernel, KernelCounter* counter)
        : kernel_(kernel), counter_(counter) {}

    double operator()(double t, double s) const {
        if (counter_ != nullptr) {
            counter_->increment();
        }
        return kernel_(t, s);
    }

private:
    const Kernel& kernel_;
    KernelCounter* counter_;
};

// K_N[f](t) = h sum_j k(t, psi(jh)) f(psi(jh)) psi'(jh)
template <typename F>
double discrete_operator(const CountedKernel& k, const DiscretizationPlan& plan, F&& f, double t) {
    const auto& nodes = plan.nodes();
    const auto& weights = plan.weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        sum += k(t, nodes[j]) * f(nodes[j]) * weights[j];
    }
    return plan.h() * sum;
}

void check_finite(const LinearSystem& sys) {
    const std::size_t n = sys.matrix.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(sys.matrix(i, j))) {
                throw AssemblyError("assembly: non-finite matrix entry at (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
        if (!std::isfinite(sys.rhs[i])) {
            throw AssemblyError("assembly: non-finite right-hand side at row " +
                                     std::to_string(i));
        }
    }
}

}  // namespace

std::string_view to_string(MethodKind method) {
    switch (method) {
        case MethodKind::OriginalSE: return "orig-se";
        case MethodKind::OriginalDE: return "orig-de";
        case MethodKind::NewSE: return "new-se";
        case MethodKind::NewDE: return "new-de";
        case MethodKind::NystromSE: return "nystrom-se";
        case MethodKind::NystromDE: return "nystrom-de";
    }
    return "?";
}

std::optional<MethodKind> parse_method(std::string_view name) {
    for (MethodKind m : {MethodKind::OriginalSE, MethodKind::OriginalDE, MethodKind::NewSE,
                         MethodKind::NewDE, MethodKind::NystromSE, MethodKind::NystromDE}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

TransformKind transform_kind(MethodKind method) {
    switch (method) {
        case MethodKind::OriginalSE:
        case MethodKind::NewSE:
        case MethodKind::NystromSE:
            return TransformKind::SE;
        default:
            return TransformKind::DE;
    }
}

bool is_original(MethodKind method) {
    return method == MethodKind::OriginalSE || method == MethodKind::OriginalDE;
}

bool is_nystrom(MethodKind method) {
    return method == MethodKind::NystromSE || method == MethodKind::NystromDE;
}

DiscretizationPlan plan_for(const Problem& problem, TransformKind kind, int n) {
    return build_plan(VariableTransform(kind, problem.interval), problem.alpha(kind),
                      problem.d(kind), n);
}

std::vector<double> collocation_points_original(const DiscretizationPlan& plan) {
    std::vector<double> points;
    points.reserve(plan.nodes().size() + 2);
    points.push_back(plan.interval().a());
    points.insert(points.end(), plan.nodes().begin(), plan.nodes().end());
    points.push_back(plan.interval().b());
    return points;
}

LinearSystem assemble_original(const Problem& problem, const DiscretizationPlan& plan,
                               KernelCounter* counter) {
    const CountedKernel k(problem.kernel, counter);
    const Interval& iv = plan.interval();
    const auto points = collocation_points_original(plan);
    const std::size_t n = points.size();
    const std::size_t last = n - 1;
    const double h = plan.h();
    const auto& nodes = plan.nodes();
    const auto& weights = plan.weights();
    auto wa = [&iv](double s) { return omega_a(iv, s); };
    auto wb = [&iv](double s) { return omega_b(iv, s); };

    LinearSystem sys{DenseMatrix(n, n), std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const double t = points[i];
        const bool border = (i == 0 || i == last);
        auto r = sys.matrix.row(i);
        // E_n: identity, with omega columns on the interior rows only.
        const double ea = border ? (i == 0 ? 1.0 : 0.0) : omega_a(iv, t);
        const double eb = border ? (i == last ? 1.0 : 0.0) : omega_b(iv, t);
        r[0] = ea - discrete_operator(k, plan, wa, t);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double e = (i == j + 1) ? 1.0 : 0.0;
            r[j + 1] = e - h * k(t, nodes[j]) * weights[j];
        }
        r[last] = eb - discrete_operator(k, plan, wb, t);
        sys.rhs[i] = problem.rhs(t);
    }
    check_finite(sys);
    return sys;
}

LinearSystem assemble_new(const Problem& problem, const DiscretizationPlan& plan,
                          KernelCounter* counter) {
    const CountedKernel k(problem.kernel, counter);
    const auto& nodes = plan.nodes();
    const auto& weights = plan.weights();
    const std::size_t m = nodes.size();
    const double h = plan.h();

    LinearSystem sys{DenseMatrix(m, m), std::vector<double>(m)};
    for (std::size_t i = 0; i < m; ++i) {
        const double t = nodes[i];
        auto r = sys.matrix.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            r[j] = (i == j ? 1.0 : 0.0) - h * k(t, nodes[j]) * weights[j];
        }
        sys.rhs[i] = problem.rhs(t);
    }
    check_finite(sys);
    return sys;
}

std::uint64_t original_kernel_evals(int n) {
    const auto nn = static_cast<std::uint64_t>(n);
    return 3 * (2 * nn + 3) * (2 * nn + 1);
}

std::uint64_t new_kernel_evals(int n) {
    const auto m = 2 * static_cast<std::uint64_t>(n) + 1;
    return m * m;
}

SolveError::SolveError(MethodKind method, int n, Cause cause, const std::string& what)
    : std::runtime_error(std::string(to_string(method)) + ", N=" + std::to_string(n) + ": " + what),
      method_(method),
      n_(n),
      cause_(cause) {}

SincSolution::SincSolution(MethodKind method, DiscretizationPlan plan, std::vector<double> coeffs,
                           std::shared_ptr<const Problem> problem)
    : method_(method), plan_(std::move(plan)), coeffs_(std::move(coeffs)), problem_(std::move(problem)) {
    if (transform_kind(method_) != plan_.kind()) {
        throw std::invalid_argument("SincSolution: plan transform does not match method");
    }
    const auto m = static_cast<std::size_t>(plan_.size());
    const std::size_t expected = is_original(method_) ? m + 2 : m;
    if (coeffs_.size() != expected) {
        throw std::invalid_argument("SincSolution: coefficient vector has wrong length");
    }
    if (is_nystrom(method_) && !problem_) {
        throw std::invalid_argument("SincSolution: Nystrom evaluation needs the problem");
    }
    if (is_original(method_)) {
        left_ = coeffs_.front();
        right_ = coeffs_.back();
        series_.assign(coeffs_.begin() + 1, coeffs_.end() - 1);
    } else {
        const Interval& iv = plan_.interval();
        left_ = coeffs_.front();
        right_ = coeffs_.back();
        series_.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double node = plan_.nodes()[j];
            series_[j] = coeffs_[j] - left_ * omega_a(iv, node) - right_ * omega_b(iv, node);
        }
    }
}

double SincSolution::evaluate(double t) const {
    return is_nystrom(method_) ? evaluate_nystrom(t) : evaluate_sinc(t);
}

double SincSolution::evaluate_sinc(double t) const {
    const Interval& iv = plan_.interval();
    if (near_left_end(iv, t)) {
        return left_;
    }
    if (near_right_end(iv, t)) {
        return right_;
    }
    const double x = plan_.transform().inverse(t);
    return left_ * omega_a(iv, t) + sinc_sum(series_, plan_.h(), x) + right_ * omega_b(iv, t);
}

double SincSolution::evaluate_nystrom(double t) const {
    const auto& nodes = plan_.nodes();
    const auto& weights = plan_.weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        sum += problem_->kernel(t, nodes[j]) * coeffs_[j] * weights[j];
    }
    return problem_->rhs(t) + plan_.h() * sum;
}

SincSolution make_solution(const Problem& problem, MethodKind method,
                           const DiscretizationPlan& plan, std::vector<double> coeffs) {
    std::shared_ptr<const Problem> ref;
    if (is_nystrom(method)) {
        ref = std::make_shared<const Problem>(problem);
    }
    return SincSolution(method, plan, std::move(coeffs), std::move(ref));
}

SincSolution solve(const Problem& problem, MethodKind method, int n, KernelCounter* counter) {
    if (n < 1) {
        throw SolveError(method, n, SolveError::Cause::InvalidMesh, "N must be a positive integer");
    }
    try {
        const DiscretizationPlan plan = plan_for(problem, transform_kind(method), n);
        LinearSystem sys = is_original(method) ? assemble_original(problem, plan, counter)
                                               : assemble_new(problem, plan, counter);
        std::vector<double> x = solve_dense(sys.matrix, sys.rhs);
        const double res = residual_inf(sys.matrix, x, sys.rhs);
        const double scale = residual_scale(sys.matrix, x, sys.rhs);
        SincSolution sol = make_solution(problem, method, plan, std::move(x));
        sol.set_residual(res, scale);
        return sol;
    } catch (const SingularMatrixError& e) {
        throw SolveError(method, n, SolveError::Cause::Singular, e.what());
    } catch (const std::domain_error& e) {
        throw SolveError(method, n, SolveError::Cause::InvalidMesh, e.what());
    } catch (const AssemblyError& e) {
        throw SolveError(method, n, SolveError::Cause::Assembly, e.what());
    }
}

double evaluate(const SincSolution& sol, double t) {
    return sol.evaluate(t);
}

}  // namespace sincfred
