#include "arpeak/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arpeak/quadrature.hpp"

namespace arpeak {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kArccosClamp = 1e-12;

// |1 - r e^{-ix}|^2 = 1 - 2 r cos(x) + r^2
double modulus_sq(double r, double x) { return 1.0 - 2.0 * r * std::cos(x) + r * r; }

} // namespace

double driver_density(const DriverSpec& driver, double lambda) {
    switch (driver.kind) {
    case DriverSpec::Kind::white:
        return driver.sigma2 / kTwoPi;
    case DriverSpec::Kind::ar1:
        return driver.sigma2 / (kTwoPi * modulus_sq(driver.coeff, lambda));
    case DriverSpec::Kind::ma1:
        return driver.sigma2 * modulus_sq(-driver.coeff, lambda) / kTwoPi;
    }
    throw ValidationError("driver: unknown kind");
}

double driver_density_min(const DriverSpec& driver) {
    const double c = std::abs(driver.coeff);
    switch (driver.kind) {
    case DriverSpec::Kind::white:
        return driver.sigma2 / kTwoPi;
    case DriverSpec::Kind::ar1:
        return driver.sigma2 / (kTwoPi * (1.0 + c) * (1.0 + c));
    case DriverSpec::Kind::ma1:
        return driver.sigma2 * (1.0 - c) * (1.0 - c) / kTwoPi;
    }
    throw ValidationError("driver: unknown kind");
}

double driver_density_max(const DriverSpec& driver) {
    const double c = std::abs(driver.coeff);
    switch (driver.kind) {
    case DriverSpec::Kind::white:
        return driver.sigma2 / kTwoPi;
    case DriverSpec::Kind::ar1:
        return driver.sigma2 / (kTwoPi * (1.0 - c) * (1.0 - c));
    case DriverSpec::Kind::ma1:
        return driver.sigma2 * (1.0 + c) * (1.0 + c) / kTwoPi;
    }
    throw ValidationError("driver: unknown kind");
}

double driver_autocov(const DriverSpec& driver, int h) {
    const int lag = std::abs(h);
    switch (driver.kind) {
    case DriverSpec::Kind::white:
        return lag == 0 ? driver.sigma2 : 0.0;
    case DriverSpec::Kind::ar1:
        return driver.sigma2 * std::pow(driver.coeff, lag) /
               (1.0 - driver.coeff * driver.coeff);
    case DriverSpec::Kind::ma1:
        if (lag == 0) return driver.sigma2 * (1.0 + driver.coeff * driver.coeff);
        if (lag == 1) return driver.sigma2 * driver.coeff;
        return 0.0;
    }
    throw ValidationError("driver: unknown kind");
}

namespace {
double density_unchecked(const ProcessSpec& spec, double lambda) {
    const double r = 1.0 - spec.delta;
    const double denom = modulus_sq(r, lambda - spec.lambda0) * modulus_sq(r, lambda + spec.lambda0);
    return driver_density(spec.driver, lambda) / denom;
}
} // namespace

double spectral_density(const ProcessSpec& spec, double lambda) {
    spec.validate();
    return density_unchecked(spec, lambda);
}

double spectral_density_at_peak(const ProcessSpec& spec) {
    spec.validate();
    const double d = spec.delta;
    const double c = std::cos(spec.lambda0);
    return driver_density(spec.driver, spec.lambda0) /
           (d * d * (4.0 * (1.0 - d) * (1.0 - c * c) + d * d));
}

std::vector<double> ma_coefficients(const ProcessSpec& spec, int J) {
    spec.validate();
    if (J < 0)
        throw ValidationError("ma_coefficients: J must be >= 0");
    const double a1 = 2.0 * (1.0 - spec.delta) * std::cos(spec.lambda0);
    const double a2 = -(1.0 - spec.delta) * (1.0 - spec.delta);
    std::vector<double> b(static_cast<std::size_t>(J) + 1);
    b[0] = 1.0;
    if (J >= 1) b[1] = a1;
    for (int j = 2; j <= J; ++j)
        b[j] = a1 * b[j - 1] + a2 * b[j - 2];
    return b;
}

int ma_truncation_order(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw ValidationError("ma_truncation_order: delta must lie in (0, 1)");
    return static_cast<int>(std::ceil(std::log(1e-10) / std::log1p(-delta)));
}

TheoreticalAcf theoretical_acf(const ProcessSpec& spec, int max_lag) {
    spec.validate();
    if (max_lag < 2)
        throw ValidationError("theoretical_acf: max_lag must be >= 2");

    // Forced panels of width <= delta/10 across |lambda - lambda0| <= 10 delta:
    // the integrand varies on scale delta there.
    std::vector<double> breakpoints;
    const double lo = std::max(0.0, spec.lambda0 - 10.0 * spec.delta);
    const double hi = std::min(kPi, spec.lambda0 + 10.0 * spec.delta);
    const double width = spec.delta / 10.0;
    for (double p = lo; p < hi; p += width)
        breakpoints.push_back(p);
    breakpoints.push_back(hi);
    // a little coarse structure away from the peak
    for (int k = 1; k < 8; ++k)
        breakpoints.push_back(kPi * k / 8.0);

    QuadratureOptions opts;
    opts.rel_tol = 1e-8;

    TheoreticalAcf acf;
    acf.gamma.resize(static_cast<std::size_t>(max_lag) + 1);
    for (int h = 0; h <= max_lag; ++h) {
        auto integrand = [&, h](double lambda) {
            return std::cos(h * lambda) * density_unchecked(spec, lambda);
        };
        // gamma(h) = 2 int_0^pi cos(h l) f(l) dl by symmetry
        auto result = integrate_adaptive(integrand, 0.0, kPi, breakpoints, opts);
        acf.gamma[h] = 2.0 * result.value;
        if (h == 0) {
            if (!(acf.gamma[0] > 0.0))
                throw NumericError("theoretical_acf: gamma(0) not positive");
            // near-zero lags only need absolute accuracy on the rho scale
            opts.abs_tol = opts.rel_tol * acf.gamma[0];
        }
    }

    acf.rho.resize(acf.gamma.size());
    for (std::size_t h = 0; h < acf.gamma.size(); ++h)
        acf.rho[h] = acf.gamma[h] / acf.gamma[0];
    return acf;
}

std::pair<double, double> yule_walker_ar2(double rho1, double rho2) {
    const double denom = 1.0 - rho1 * rho1;
    if (!(denom > 0.0))
        throw EstimationError("yule_walker_ar2: degenerate autocorrelations (rho1^2 >= 1)");
    return {rho1 * (1.0 - rho2) / denom, (rho2 - rho1 * rho1) / denom};
}

std::pair<double, double> population_ar2(const ProcessSpec& spec) {
    const TheoreticalAcf acf = theoretical_acf(spec, 2);
    return yule_walker_ar2(acf.rho[1], acf.rho[2]);
}

double population_peak(const ProcessSpec& spec) {
    const auto [a1, a2] = population_ar2(spec);
    if (!(a2 < 0.0))
        throw EstimationError("population_peak: no complex roots, no interior peak (a2 >= 0)");
    const double u = a1 * (1.0 - a2) / (-4.0 * a2);
    if (std::abs(u) > 1.0 + kArccosClamp)
        throw EstimationError("population_peak: peak lies at a boundary of (0, pi)");
    return std::acos(std::clamp(u, -1.0, 1.0));
}

double peak_kernel_integral(double delta, double lambda0) {
    const double s = (2.0 - delta) / delta;
    const double t1 = std::atan(s * std::tan((kPi - lambda0) / 2.0));
    const double t2 = std::atan(s * std::tan(lambda0 / 2.0));
    return 2.0 / (delta * (2.0 - delta)) * (t1 + t2);
}

} // namespace arpeak
