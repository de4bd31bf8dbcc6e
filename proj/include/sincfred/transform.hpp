#pragma once

#include <string_view>
#include <vector>

namespace sincfred {

/// SE: t = ((b-a)/2) tanh(x/2) + (b+a)/2
/// DE: t = ((b-a)/2) tanh((pi/2) sinh x) + (b+a)/2
enum class TransformKind { SE, DE };

std::string_view to_string(TransformKind kind);

/// Closed finite interval [a, b] with a < b.
class Interval {
public:
    Interval(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }
    double length() const { return b_ - a_; }

private:
    double a_;
    double b_;
};

/// Change of variables mapping the real line onto (a, b).
class VariableTransform {
public:
    VariableTransform(TransformKind kind, Interval interval)
        : kind_(kind), interval_(interval) {}

    TransformKind kind() const { return kind_; }
    const Interval& interval() const { return interval_; }

    /// psi(x). Saturates to exactly a or b once the endpoint distance
    /// underflows.
    double forward(double x) const;

    /// psi'(x) > 0; may underflow to 0 for large |x|.
    double derivative(double x) const;

    /// psi^{-1}(t) for a < t < b. Throws std::domain_error at or
    /// outside the endpoints.
    double inverse(double t) const;

private:
    TransformKind kind_;
    Interval interval_;
};

/// h = sqrt(pi d / (alpha N))             (SE)
/// h = log(2 d N / alpha) / N             (DE, requires 2dN/alpha > 1)
double mesh_size(TransformKind kind, double alpha, double d, int n);

/// Transform, N and mesh size together with the 2N+1 nodes psi(jh),
/// j = -N..N. nodes()[j + N] = psi(jh).
class DiscretizationPlan {
public:
    DiscretizationPlan(VariableTransform transform, double alpha, double d, int n);

    const VariableTransform& transform() const { return transform_; }
    const Interval& interval() const { return transform_.interval(); }
    TransformKind kind() const { return transform_.kind(); }
    int n() const { return n_; }
    int size() const { return 2 * n_ + 1; }
    double alpha() const { return alpha_; }
    double d() const { return d_; }
    double h() const { return h_; }

    const std::vector<double>& nodes() const { return nodes_; }
    /// psi'(jh) for j = -N..N, same indexing as nodes().
    const std::vector<double>& weights() const { return derivs_; }

    double node(int j) const { return nodes_[static_cast<std::size_t>(j + n_)]; }
    double node_derivative(int j) const { return derivs_[static_cast<std::size_t>(j + n_)]; }

private:
    VariableTransform transform_;
    int n_;
    double alpha_;
    double d_;
    double h_;
    std::vector<double> nodes_;
    std::vector<double> derivs_;
};

DiscretizationPlan build_plan(const VariableTransform& tr, double alpha, double d, int n);

}  // namespace sincfred
