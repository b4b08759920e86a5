// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "arpeak/spectral_model.hpp"
#include "arpeak/types.hpp"

namespace oracles {

// Variance of a stationary AR(2) driven by white noise:
// gamma(0) = (1-a2)/(1+a2) * s2 / ((1-a2)^2 - a1^2).
inline double ar2_variance(double a1, double a2, double sigma2) {
    return (1.0 - a2) / (1.0 + a2) * sigma2 / ((1.0 - a2) * (1.0 - a2) - a1 * a1);
}

// MA(infinity) coefficient through the expanded trigonometric sum
// (1-d)^j [2 cos(j l0) + sum_{k=1}^{j-1} cos((2k-j) l0)], j >= 1.
inline double ma_coefficient_trig(double delta, double lambda0, int j) {
    if (j == 0)
        return 1.0;
    double sum = 2.0 * std::cos(j * lambda0);
    for (int k = 1; k <= j - 1; ++k)
        sum += std::cos((2.0 * k - j) * lambda0);
    return std::pow(1.0 - delta, j) * sum;
}

// Autocovariance via the MA representation:
// gamma_X(h) = sum_m gamma_U(m) sum_j b_j b_{j+|h-m|}, truncated at the
// geometric envelope (1-d)^J < 1e-10 plus the driver's own reach.
inline double ma_sum_gamma(const arpeak::ProcessSpec& spec, int h) {
    using arpeak::DriverSpec;
    int reach = 0;
    if (spec.driver.kind == DriverSpec::Kind::ma1) {
        reach = 1;
    } else if (spec.driver.kind == DriverSpec::Kind::ar1 && spec.driver.coeff != 0.0) {
        reach = static_cast<int>(
            std::ceil(std::log(1e-14) / std::log(std::abs(spec.driver.coeff))));
    }
    const int J = arpeak::ma_truncation_order(spec.delta);
    const std::vector<double> b = arpeak::ma_coefficients(spec, J + h + reach + 1);

    auto lag_product = [&](int lag) {
        double s = 0.0;
        for (int j = 0; j + lag <= J + h + reach; ++j)
            s += b[j] * b[j + lag];
        return s;
    };

    double gamma = 0.0;
    for (int m = -reach; m <= reach; ++m)
        gamma += arpeak::driver_autocov(spec.driver, m) * lag_product(std::abs(h - m));
    return gamma;
}

inline arpeak::TimeSeries gaussian_series(int n, unsigned seed, double mean = 0.0,
                                          double sd = 1.0) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(mean, sd);
    arpeak::TimeSeries x;
    x.values.resize(n);
    for (double& v : x.values)
        v = normal(rng);
    return x;
}

} // namespace oracles
