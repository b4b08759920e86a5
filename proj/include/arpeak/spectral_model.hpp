#pragma once

#include <utility>
#include <vector>

#include "arpeak/types.hpp"

namespace arpeak {

// Theoretical autocovariances gamma(0..H) of the process and the derived
// autocorrelations rho(h) = gamma(h)/gamma(0).
struct TheoreticalAcf {
    std::vector<double> gamma;
    std::vector<double> rho;
};

// Spectral density f_U of the driver and its closed-form extrema/ACF on
// [0, pi]. Density convention: gamma(h) = int_{-pi}^{pi} cos(h l) f(l) dl,
// so the white-noise density is sigma^2 / (2 pi).
double driver_density(const DriverSpec& driver, double lambda);
double driver_density_min(const DriverSpec& driver);
double driver_density_max(const DriverSpec& driver);
double driver_autocov(const DriverSpec& driver, int h);

// f_delta(lambda) = f_U(lambda) / (|1-(1-d)e^{-i(l-l0)}|^2 |1-(1-d)e^{-i(l+l0)}|^2),
// evaluated through the real modulus form. Symmetric in lambda.
double spectral_density(const ProcessSpec& spec, double lambda);

// Value at the peak through the closed form
// f(lambda0) = d^{-2} (4(1-d)(1-cos^2 l0) + d^2)^{-1} f_U(l0);
// algebraically identical to spectral_density(spec, lambda0).
double spectral_density_at_peak(const ProcessSpec& spec);

// MA(infinity) coefficients b_0..b_J of the causal filter, by the linear
// recursion b_j = a1 b_{j-1} + a2 b_{j-2} with a1 = 2(1-d)cos(l0),
// a2 = -(1-d)^2, b_0 = 1.
std::vector<double> ma_coefficients(const ProcessSpec& spec, int J);

// Smallest J with (1-delta)^J < 1e-10 (geometric envelope of the b_j).
int ma_truncation_order(double delta);

// gamma(h) = int_{-pi}^{pi} cos(h l) f_delta(l) dl by adaptive quadrature
// with forced panel width <= delta/10 inside |l - l0| <= 10 delta.
TheoreticalAcf theoretical_acf(const ProcessSpec& spec, int max_lag);

// Population best-in-mean-square AR(2) coefficients from the theoretical
// rho(1), rho(2) through the two-lag Yule-Walker solution.
std::pair<double, double> population_ar2(const ProcessSpec& spec);

// Location of the spectral peak of the population AR(2) fit,
// arccos(a1(1-a2)/(-4 a2)), in (0, pi).
double population_peak(const ProcessSpec& spec);

// Closed form of int_0^pi |1 - (1-d) e^{-i(l-l0)}|^{-2} dl. This is the
// integral that produces the O(1/delta) variance growth; used by the
// variance-bracket diagnostics.
double peak_kernel_integral(double delta, double lambda0);

// Yule-Walker map shared with the sample-side fit.
std::pair<double, double> yule_walker_ar2(double rho1, double rho2);

} // namespace arpeak
