#pragma once

#include <vector>

#include "arpeak/types.hpp"

namespace arpeak {

enum class Transform {
    automatic, // fast transform, direct sum for prime lengths
    fast,
    direct, // O(n^2) oracle
};

// Ordinates I_n(lambda_{j,n}) for j = 0..floor(n/2), lambda_{j,n} = 2 pi j / n,
// with I_n(l) = (2 pi n)^{-1} |sum_t x_t e^{-i l t}|^2.
struct Periodogram {
    int n = 0;
    std::vector<double> ordinates; // j = 0..floor(n/2)
    bool centered = false;         // sample mean subtracted before transform

    double fourier_frequency(int j) const;
    double at_pi_or_zero() const; // I_n(pi) when n even, else 0 (no pi ordinate)
};

struct AcfEstimates {
    std::vector<double> gamma_hat;   // Fourier-grid estimator, lags 0..H
    std::vector<double> gamma_tilde; // biased sample autocovariance, lags 0..H
};

Periodogram compute_periodogram(const TimeSeries& x, bool center,
                                Transform transform = Transform::automatic);

// (2 pi / n) sum_{j in G(n)} I(lambda_j) cos(lambda_j h) over the symmetric
// grid G(n) = {-N..-1, 1..N}, N = floor(n/2), taken literally: for even n
// the indices -N and N both map to frequency pi, so that ordinate enters
// twice. This convention makes the gamma_hat/gamma_tilde identity below
// exact.
std::vector<double> gamma_hat(const Periodogram& pg, int max_lag);

// Biased (divide-by-n) sample autocovariance of the series as given.
std::vector<double> gamma_tilde(const TimeSeries& x, int max_lag);

// Both estimators for lags 0..H from one pass.
AcfEstimates acf_estimates(const TimeSeries& x, int max_lag, bool center,
                           Transform transform = Transform::automatic);

// Residual of the exact finite-sample identity
//   gamma_hat(h) = gamma_tilde(h) + 1(h>=1) gamma_tilde(n-h)
//                  - (2 pi / n)(I_n(0) - 1(n even) I_n(pi) cos(pi h)),
// evaluated on the raw (uncentered) series. Zero up to roundoff for every
// series and every 0 <= h < n.
double acf_identity_residual(const TimeSeries& x, int h);

} // namespace arpeak
