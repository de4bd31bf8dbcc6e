#include "sincfred/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sincfred {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};

double lanczos_log_gamma(double x) {
    // Gamma(x) = sqrt(2 pi) t^{x - 1/2} e^{-t} A(x), t = x + g - 1/2
    const double z = x - 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(series);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("log_gamma: argument must be positive and finite");
    }
    if (x < 0.5) {
        // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               lanczos_log_gamma(1.0 - x);
    }
    return lanczos_log_gamma(x);
}

double beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) {
        throw std::domain_error("beta: arguments must be positive");
    }
    return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

}  // namespace sincfred
