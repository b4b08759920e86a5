#pragma once

#include <functional>
#include <vector>

namespace arpeak {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    // Absolute floor for the acceptance test err <= max(rel_tol*|I|, abs_tol):
    // needed when the integral itself is near zero (cancelling cosine lags).
    double abs_tol = 0.0;
    int max_panels = 20000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive composite Gauss-Kronrod (7-15) over [a, b]. `breakpoints` are
// forced initial panel boundaries (clipped to [a, b]); refinement then
// bisects the panel with the largest error estimate until the target is
// met. Throws NumericError carrying the achieved estimate on budget
// exhaustion.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const std::vector<double>& breakpoints,
                                    const QuadratureOptions& opts = {});

} // namespace arpeak
