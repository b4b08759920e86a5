#include "arpeak/ar2fit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "arpeak/spectral_model.hpp"

namespace arpeak {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kArccosClamp = 1e-12;

FrequencyEstimate make_estimate(double lambda, PeakMethod method) {
    return {lambda, kTwoPi / lambda, method};
}

} // namespace

Ar2Fit fit_ar2(double rho1, double rho2, AcfSource source) {
    if (!(std::abs(rho1) < 1.0))
        throw EstimationError("fit_ar2: degenerate autocorrelations (|rho1| >= 1)");
    const auto [a1, a2] = yule_walker_ar2(rho1, rho2);
    Ar2Fit fit;
    fit.a1 = a1;
    fit.a2 = a2;
    fit.rho1 = rho1;
    fit.rho2 = rho2;
    fit.complex_roots = a1 * a1 + 4.0 * a2 < 0.0;
    fit.source = source;
    return fit;
}

FrequencyEstimate peak_frequency_max(const Ar2Fit& fit) {
    if (!(fit.a2 < 0.0))
        throw EstimationError("peak_frequency_max: no interior spectral peak (a2 >= 0)");
    const double u = fit.a1 * (1.0 - fit.a2) / (-4.0 * fit.a2);
    if (std::abs(u) > 1.0 + kArccosClamp) {
        std::ostringstream os;
        os << "peak_frequency_max: density peaks at a boundary of {0, pi} (argument " << u << ")";
        throw EstimationError(os.str());
    }
    return make_estimate(std::acos(std::clamp(u, -1.0, 1.0)), PeakMethod::ar2_max);
}

FrequencyEstimate peak_frequency_root(const Ar2Fit& fit) {
    if (!fit.complex_roots)
        throw EstimationError("peak_frequency_root: no complex root pair (a1^2 + 4 a2 >= 0)");
    // complex roots imply |a1| < 2 sqrt(-a2), so the argument is interior
    const double u = fit.a1 / (2.0 * std::sqrt(-fit.a2));
    return make_estimate(std::acos(u), PeakMethod::ar2_root);
}

FrequencyEstimate pgram_argmax(const Periodogram& pg) {
    const int N = pg.n / 2;
    if (N < 1 || pg.ordinates.size() < static_cast<std::size_t>(N) + 1)
        throw ValidationError("pgram_argmax: periodogram has no positive-frequency ordinates");
    int best = 1;
    for (int j = 2; j <= N; ++j)
        if (pg.ordinates[j] > pg.ordinates[best])
            best = j; // strict comparison: ties resolve to the smallest index
    return make_estimate(pg.fourier_frequency(best), PeakMethod::pgram_argmax);
}

double ar2_spectral_density(double a1, double a2, double sigma2, double lambda) {
    const std::complex<double> z = std::polar(1.0, -lambda);
    const std::complex<double> poly = 1.0 - a1 * z - a2 * z * z;
    return sigma2 / (kTwoPi * std::norm(poly));
}

EstimateReport estimate_from_series(const TimeSeries& x, const EstimateOptions& options) {
    require_estimable(x);

    EstimateReport report;
    report.n = x.size();
    report.centered = options.center;
    report.acf_source = options.acf_source;

    const Periodogram pg = compute_periodogram(x, options.center, options.transform);
    report.pgram_max.estimate = pgram_argmax(pg);

    const AcfEstimates acf = acf_estimates(x, 2, options.center, options.transform);
    const std::vector<double>& g =
        options.acf_source == AcfSource::fourier ? acf.gamma_hat : acf.gamma_tilde;
    report.acf0 = g[0];

    if (!(g[0] > 0.0)) {
        report.fit_note = "degenerate series: zero variance";
        report.ar2_max.note = report.fit_note;
        report.ar2_root.note = report.fit_note;
        return report;
    }

    try {
        Ar2Fit fit = fit_ar2(g[1] / g[0], g[2] / g[0], options.acf_source);
        report.fit = fit;
        report.innovation_variance = g[0] * (1.0 - fit.a1 * fit.rho1 - fit.a2 * fit.rho2);
        try {
            report.ar2_max.estimate = peak_frequency_max(fit);
        } catch (const EstimationError& e) {
            report.ar2_max.note = e.what();
        }
        try {
            report.ar2_root.estimate = peak_frequency_root(fit);
        } catch (const EstimationError& e) {
            report.ar2_root.note = e.what();
        }
    } catch (const EstimationError& e) {
        report.fit_note = e.what();
        report.ar2_max.note = e.what();
        report.ar2_root.note = e.what();
    }
    return report;
}

} // namespace arpeak
