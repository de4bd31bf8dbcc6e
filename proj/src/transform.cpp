#include "sincfred/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sincfred {

namespace {

// Argument of tanh in the transform.
double tanh_argument(TransformKind kind, double x) {
    if (kind == TransformKind::SE) {
        return 0.5 * x;
    }
    return 0.5 * std::numbers::pi * std::sinh(x);
}

// sech^2(y) without overflowing cosh.
double sech_squared(double y) {
    const double e = std::exp(-2.0 * std::abs(y));
    const double denom = 1.0 + e;
    return 4.0 * e / (denom * denom);
}

}  // namespace

std::string_view to_string(TransformKind kind) {
    return kind == TransformKind::SE ? "SE" : "DE";
}

Interval::Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw std::invalid_argument("Interval: require finite a < b");
    }
}

double VariableTransform::forward(double x) const {
    const double a = interval_.a();
    const double b = interval_.b();
    const double y = tanh_argument(kind_, x);
    // Measured from the nearer endpoint so that nodes close to a or b keep
    // their relative accuracy: b - psi = (b-a) / (1 + e^{2y}).
    if (y >= 0.0) {
        return b - (b - a) / (1.0 + std::exp(2.0 * y));
    }
    return a + (b - a) / (1.0 + std::exp(-2.0 * y));
}

double VariableTransform::derivative(double x) const {
    const double len = interval_.length();
    if (kind_ == TransformKind::SE) {
        return 0.25 * len * sech_squared(0.5 * x);
    }
    const double c = std::cosh(x);
    const double s2 = sech_squared(tanh_argument(kind_, x));
    if (s2 == 0.0 || !std::isfinite(c)) {
        return 0.0;
    }
    return 0.25 * len * std::numbers::pi * c * s2;
}

double VariableTransform::inverse(double t) const {
    const double a = interval_.a();
    const double b = interval_.b();
    if (!(t > a && t < b)) {
        throw std::domain_error("VariableTransform::inverse: t = " + std::to_string(t) +
                                " is not strictly inside (a, b)");
    }
    const double z = std::log((t - a) / (b - t));
    if (kind_ == TransformKind::SE) {
        return z;
    }
    return std::asinh(z / std::numbers::pi);
}

double mesh_size(TransformKind kind, double alpha, double d, int n) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::domain_error("mesh_size: alpha must lie in (0, 1]");
    }
    if (!(d > 0.0)) {
        throw std::domain_error("mesh_size: d must be positive");
    }
    if (n < 1) {
        throw std::domain_error("mesh_size: N must be a positive integer");
    }
    const double nn = static_cast<double>(n);
    if (kind == TransformKind::SE) {
        return std::sqrt(std::numbers::pi * d / (alpha * nn));
    }
    const double arg = 2.0 * d * nn / alpha;
    if (!(arg > 1.0)) {
        throw std::domain_error("mesh_size: DE mesh requires 2dN/alpha > 1 (got " +
                                std::to_string(arg) + ")");
    }
    return std::log(arg) / nn;
}

DiscretizationPlan::DiscretizationPlan(VariableTransform transform, double alpha, double d, int n)
    : transform_(transform),
      n_(n),
      alpha_(alpha),
      d_(d),
      h_(mesh_size(transform.kind(), alpha, d, n)) {
    const auto m = static_cast<std::size_t>(2 * n + 1);
    nodes_.reserve(m);
    derivs_.reserve(m);
    for (int j = -n; j <= n; ++j) {
        const double x = j * h_;
        nodes_.push_back(transform_.forward(x));
        derivs_.push_back(transform_.derivative(x));
    }
}

DiscretizationPlan build_plan(const VariableTransform& tr, double alpha, double d, int n) {
    return DiscretizationPlan(tr, alpha, d, n);
}

}  // namespace sincfred
