#pragma once

#include "sincfred/transform.hpp"

namespace sincfred {

/// h * sum_{j=-N}^{N} f(psi(jh)) psi'(jh), summed left to right.
/// f is only called at plan nodes.
template <typename F>
double sinc_quadrature(F&& f, const DiscretizationPlan& plan) {
    const auto& nodes = plan.nodes();
    const auto& weights = plan.weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        sum += f(nodes[j]) * weights[j];
    }
    return plan.h() * sum;
}

}  // namespace sincfred
