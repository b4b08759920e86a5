#pragma once

#include <optional>
#include <string>

#include "arpeak/periodogram.hpp"
#include "arpeak/types.hpp"

namespace arpeak {

enum class AcfSource {
    fourier, // gamma_hat (Fourier-grid estimator); the default
    sample,  // gamma_tilde (classical sample autocovariance)
};

struct Ar2Fit {
    double a1 = 0.0;
    double a2 = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
    bool complex_roots = false; // a1^2 + 4 a2 < 0
    AcfSource source = AcfSource::fourier;

    double discriminant() const { return a1 * a1 + 4.0 * a2; }
};

enum class PeakMethod { ar2_max, ar2_root, pgram_argmax };

struct FrequencyEstimate {
    double lambda = 0.0; // radians per step, in (0, pi)
    double period = 0.0; // 2 pi / lambda, sampling units
    PeakMethod method = PeakMethod::ar2_max;
};

// Two-lag Yule-Walker fit from autocorrelations. Throws EstimationError
// when |rho1| >= 1 (degenerate ACF).
Ar2Fit fit_ar2(double rho1, double rho2, AcfSource source = AcfSource::fourier);

// arccos(a1 (1-a2) / (-4 a2)): the argmax of the fitted AR(2) spectral
// density. Requires a2 < 0 and the argument within 1e-12 of [-1, 1]
// (clamped); otherwise the density peaks at a boundary and an
// EstimationError is thrown.
FrequencyEstimate peak_frequency_max(const Ar2Fit& fit);

// arccos(a1 / (2 sqrt(-a2))): the unit-circle projection of the complex
// root pair. Requires complex roots.
FrequencyEstimate peak_frequency_root(const Ar2Fit& fit);

// Smallest j in 1..floor(n/2) maximizing I_n(lambda_{j,n}).
FrequencyEstimate pgram_argmax(const Periodogram& pg);

struct EstimateOptions {
    bool center = true;
    AcfSource acf_source = AcfSource::fourier;
    Transform transform = Transform::automatic;
};

// One method's outcome: either an estimate or the reason it is undefined.
struct MethodResult {
    std::optional<FrequencyEstimate> estimate;
    std::string note; // empty on success

    bool ok() const { return estimate.has_value(); }
};

struct EstimateReport {
    int n = 0;
    bool centered = false;
    AcfSource acf_source = AcfSource::fourier;
    std::optional<Ar2Fit> fit;
    std::string fit_note; // set when the AR(2) fit itself is undefined
    double acf0 = 0.0;    // gamma(0) of the chosen estimator
    double innovation_variance = 0.0; // gamma(0)(1 - a1 rho1 - a2 rho2), 0 if no fit
    MethodResult ar2_max;
    MethodResult ar2_root;
    MethodResult pgram_max;
};

// Periodogram + chosen ACF estimator + AR(2) fit + all three frequency
// estimators. Per-method failures become notes; only n < 8 or non-finite
// input aborts.
EstimateReport estimate_from_series(const TimeSeries& x, const EstimateOptions& options = {});

// Fitted AR(2) spectral density s2/(2 pi) |1 - a1 e^{-il} - a2 e^{-2il}|^{-2}.
double ar2_spectral_density(double a1, double a2, double sigma2, double lambda);

} // namespace arpeak
