#pragma once

namespace sincfred {

/// log Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms),
/// reflection for x < 1/2.
double log_gamma(double x);

/// B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q) for p, q > 0.
double beta(double p, double q);

}  // namespace sincfred
