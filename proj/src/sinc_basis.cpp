#include "sincfred/sinc_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sincfred {

double sinc(double x) {
    const double px = std::numbers::pi * x;
    if (std::abs(px) < 1e-8) {
        return 1.0;
    }
    // Reduce to sin(pi r) with r = x - k so integer arguments give 0 exactly.
    const double k = std::nearbyint(x);
    const double r = x - k;
    double s = std::sin(std::numbers::pi * r);
    if (std::fmod(std::abs(k), 2.0) == 1.0) {
        s = -s;
    }
    return s / px;
}

double sinc_basis(int j, double h, double x) {
    return sinc(x / h - static_cast<double>(j));
}

double omega_a(const Interval& iv, double t) {
    return (iv.b() - t) / iv.length();
}

double omega_b(const Interval& iv, double t) {
    return (t - iv.a()) / iv.length();
}

SampleVector::SampleVector(std::vector<double> values, const DiscretizationPlan& plan)
    : values_(std::move(values)), plan_(plan) {
    if (values_.size() != static_cast<std::size_t>(plan_.size())) {
        throw std::invalid_argument("SampleVector: expected 2N+1 samples");
    }
}

bool near_left_end(const Interval& iv, double t) {
    return t - iv.a() <= 1e-14 * iv.length();
}

bool near_right_end(const Interval& iv, double t) {
    return iv.b() - t <= 1e-14 * iv.length();
}

double sinc_sum(std::span<const double> coeffs, double h, double x) {
    const int n = static_cast<int>(coeffs.size() / 2);
    double sum = 0.0;
    for (int j = -n; j <= n; ++j) {
        sum += coeffs[static_cast<std::size_t>(j + n)] * sinc_basis(j, h, x);
    }
    return sum;
}

double interpolate(const SampleVector& samples, double t) {
    const DiscretizationPlan& plan = samples.plan();
    const Interval& iv = plan.interval();
    const int n = plan.n();
    const double left = samples.at(-n);
    const double right = samples.at(n);
    if (near_left_end(iv, t)) {
        return left;
    }
    if (near_right_end(iv, t)) {
        return right;
    }
    const double x = plan.transform().inverse(t);
    const double h = plan.h();
    double sum = 0.0;
    for (int j = -n; j <= n; ++j) {
        const double node = plan.node(j);
        const double corrected =
            samples.at(j) - left * omega_a(iv, node) - right * omega_b(iv, node);
        sum += corrected * sinc_basis(j, h, x);
    }
    return left * omega_a(iv, t) + right * omega_b(iv, t) + sum;
}

double lebesgue_sum(double h, int n, double x) {
    double sum = 0.0;
    for (int j = -n; j <= n; ++j) {
        sum += std::abs(sinc_basis(j, h, x));
    }
    return sum;
}

double lebesgue_bound(int n) {
    return (2.0 / std::numbers::pi) * (3.0 + std::log(static_cast<double>(n)));
}

}  // namespace sincfred
