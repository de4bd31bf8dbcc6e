#include "sincfred/problems.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "sincfred/special_functions.hpp"

namespace sincfred {

namespace {

constexpr int kExample3Terms = 100;

struct Example3Coefficients {
    std::array<double, kExample3Terms> a{};
    std::array<double, kExample3Terms> one_minus_b{};
    double rhs_constant = 0.0;

    Example3Coefficients() {
        for (int l = 1; l <= kExample3Terms; ++l) {
            const auto i = static_cast<std::size_t>(l - 1);
            a[i] = detail::example3_a(l);
            one_minus_b[i] = 1.0 - detail::example3_b(l);
            rhs_constant += beta(a[i] + 1.5, 1.0 + one_minus_b[i]);
        }
    }

    double s_factor(double s) const {
        const double log_s = std::log(s);
        const double log_1ms = std::log1p(-s);
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            sum += std::exp(a[i] * log_s + one_minus_b[i] * log_1ms);
        }
        return sum;
    }
};

const Example3Coefficients& example3_coefficients() {
    static const Example3Coefficients coeffs;
    return coeffs;
}

}  // namespace

namespace detail {

double example3_a(int l) {
    return std::pow(3.0 / std::numbers::pi, l);
}

double example3_b(int l) {
    return std::pow(2.0 * std::numbers::sqrt2 / 3.0, l);
}

double example3_s_factor(double s) {
    return example3_coefficients().s_factor(s);
}

double example3_rhs_constant() {
    return example3_coefficients().rhs_constant;
}

}  // namespace detail

Problem example1() {
    constexpr double r = 0.5;
    const double shift = std::atan(1.0 / (2.0 * r));
    auto u = [](double t) { return r / ((t - 0.5) * (t - 0.5) + r * r); };
    return Problem{
        .name = "1",
        .interval = Interval(0.0, 1.0),
        .kernel = [](double t, double s) { return t * s; },
        .rhs = [u, shift](double t) { return u(t) - t * shift; },
        .alpha_se = 1.0,
        .d_se = kPiM / 2.0,
        .alpha_de = 1.0,
        .d_de = kPiM / 6.0,
        .exact = u,
    };
}

Problem example2() {
    constexpr double pi = std::numbers::pi;
    return Problem{
        .name = "2",
        .interval = Interval(0.0, pi / 2.0),
        .kernel = [](double t, double s) { return std::pow(t * s, 0.75); },
        .rhs =
            [](double t) {
                return std::sqrt(t) * (1.0 - (pi * pi / 9.0) * std::pow(pi * t / 2.0, 0.25));
            },
        .alpha_se = 0.5,
        .d_se = kPiM,
        .alpha_de = 0.5,
        .d_de = kPiM / 2.0,
        .exact = [](double t) { return std::sqrt(t); },
    };
}

Problem example3() {
    const double power = std::numbers::sqrt3 - 1.0;
    const Example3Coefficients& coeffs = example3_coefficients();
    const double c = coeffs.rhs_constant;
    return Problem{
        .name = "3",
        .interval = Interval(0.0, 1.0),
        .kernel = [power, &coeffs](double t, double s) {
            return std::pow(t, power) * coeffs.s_factor(s);
        },
        .rhs = [power, c](double t) { return std::sqrt(t) - std::pow(t, power) * c; },
        .alpha_se = 0.5,
        .d_se = kPiM,
        .alpha_de = 0.5,
        .d_de = kPiM / 2.0,
        .exact = [](double t) { return std::sqrt(t); },
    };
}

Problem example4() {
    auto kernel = [](double t, double s) {
        const double t2 = t * t;
        const double s2 = s * s;
        const double s18 = std::pow(s, 18);
        const double s20 = s18 * s2;
        const double p = (2.0 - t2) / (2.0 + t2);
        const double weight = std::pow((1.0 - s) * (1.0 + s), p) / ((2.0 + t2) * (1.0 + s20));
        const double bracket =
            5.0 * (2.0 + t2) * s18 * (1.0 - s) * (1.0 + s) + (s20 + 1.0) * (s20 * s + s + 2.0);
        return 2.0 * weight * bracket;
    };
    auto u = [](double t) { return 2.0 * t / (1.0 + std::pow(t, 20)); };
    auto g = [u](double t) {
        const double q = 2.0 + t * t;
        return u(t) - (4.0 / q) * beta(1.5, 4.0 / q);
    };
    return Problem{
        .name = "4",
        .interval = Interval(-1.0, 1.0),
        .kernel = kernel,
        .rhs = g,
        .alpha_se = 1.0,
        .d_se = kPiM / 2.0,
        .alpha_de = 1.0,
        .d_de = 0.125,
        .exact = u,
    };
}

Problem example_by_id(int id) {
    switch (id) {
        case 1: return example1();
        case 2: return example2();
        case 3: return example3();
        case 4: return example4();
        default: throw std::out_of_range("unknown example " + std::to_string(id));
    }
}

}  // namespace sincfred
