#pragma once

#include <span>
#include <vector>

#include "sincfred/transform.hpp"

namespace sincfred {

/// sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x);

/// S(j,h)(x) = sinc((x - jh) / h).
double sinc_basis(int j, double h, double x);

/// (b - t) / (b - a)
double omega_a(const Interval& iv, double t);
/// (t - a) / (b - a)
double omega_b(const Interval& iv, double t);

/// Samples f(psi(jh)), j = -N..N, tied to the plan that produced them.
class SampleVector {
public:
    SampleVector(std::vector<double> values, const DiscretizationPlan& plan);

    const std::vector<double>& values() const { return values_; }
    const DiscretizationPlan& plan() const { return plan_; }
    double at(int j) const { return values_[static_cast<std::size_t>(j + plan_.n())]; }

private:
    std::vector<double> values_;
    DiscretizationPlan plan_;
};

/// Samples f at the nodes of a plan.
template <typename F>
SampleVector sample(F&& f, const DiscretizationPlan& plan) {
    std::vector<double> values;
    values.reserve(plan.nodes().size());
    for (double t : plan.nodes()) {
        values.push_back(f(t));
    }
    return SampleVector(std::move(values), plan);
}

/// Generalized Sinc approximation P_N[f](t) on [a, b]: the boundary
/// samples carried by omega_a/omega_b plus Sinc interpolation of the
/// remainder.
double interpolate(const SampleVector& samples, double t);

/// sum_{j=-N}^{N} |S(j,h)(x)|
double lebesgue_sum(double h, int n, double x);

/// (2/pi)(3 + log N), the upper bound for lebesgue_sum.
double lebesgue_bound(int n);

/// True when t is within 1e-14 (b-a) of a (resp. b); ψ^{-1} is not
/// evaluated there.
bool near_left_end(const Interval& iv, double t);
bool near_right_end(const Interval& iv, double t);

/// Evaluates sum_j coeffs[j+N] S(j,h)(x) at x = psi^{-1}(t).
double sinc_sum(std::span<const double> coeffs, double h, double x);

}  // namespace sincfred
