#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arpeak/types.hpp"

namespace arpeak {

// Monte Carlo study of the triangular-array estimator: delta_n = c n^{-alpha},
// RMSE of the fitted peak frequency against its population counterpart,
// log-log slope across the n grid.
struct RateStudyConfig {
    double alpha = 0.25;   // in [0, 1/3)
    double c_delta = 1.0;  // delta_n = c_delta * n^{-alpha}
    double lambda0 = 1.0;
    DriverSpec driver = DriverSpec::white(1.0);
    std::vector<int> n_grid = {512, 1024, 2048, 4096, 8192};
    int replicas = 500;
    std::uint64_t seed = 1;
    int threads = 0; // 0 = hardware concurrency

    void validate() const;
    double delta_for(int n) const;
};

struct SlopeFit {
    double slope = 0.0;
    double se = 0.0; // standard error of the slope
    double intercept = 0.0;
};

struct RatePoint {
    int n = 0;
    double delta_n = 0.0;
    double target = 0.0; // population peak frequency for delta_n
    double rmse = 0.0;
    double bias = 0.0;
    int failures = 0; // replicas where the peak estimator is undefined
};

struct RateStudyResult {
    RateStudyConfig config;
    std::vector<RatePoint> points;
    SlopeFit slope;
    bool flagged = false; // > 20% failures at some n
    std::string warning;
};

struct ParamRatePoint {
    int n = 0;
    double delta_n = 0.0;
    double target_a1 = 0.0;
    double target_a2 = 0.0;
    double rmse_a1 = 0.0;
    double rmse_a2 = 0.0;
    double bias_a1 = 0.0;
    double bias_a2 = 0.0;
    int failures = 0; // degenerate fits (|rho1| >= 1)
};

struct ParamRateStudyResult {
    RateStudyConfig config;
    std::vector<ParamRatePoint> points;
    SlopeFit slope_a1;
    SlopeFit slope_a2;
    bool flagged = false;
    std::string warning;
};

RateStudyResult run_rate_study(const RateStudyConfig& cfg);
ParamRateStudyResult run_param_rate_study(const RateStudyConfig& cfg);

// Small-delta diagnostics of the family: stabilization of d^2 f(l0), the
// variance bracket from the peak-kernel integral, the cosine gap of the
// autocorrelations, and the drift of the population peak toward l0.
struct LimitCheckConfig {
    std::vector<double> delta_grid = {0.2, 0.1, 0.05, 0.025};
    double lambda0 = 1.0;
    DriverSpec driver = DriverSpec::white(1.0);
    int max_lag = 4;
    // Cosine-gap envelope: gap(delta) <= C delta with
    // C = envelope_safety * gap(delta_grid.front()) / delta_grid.front().
    double envelope_safety = 1.5;
    // Gaps below this are inside the quadrature noise (acf tolerance 1e-8)
    // and count as passing regardless of the envelope.
    double cos_gap_floor = 1e-6;
};

struct LimitCheckRow {
    double delta = 0.0;
    double peak_scaled = 0.0;     // delta^2 f(l0)
    double peak_scaled_limit = 0.0;
    bool peak_ok = false;
    double gamma0 = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool bracket_ok = false;
    double cos_gap = 0.0;         // max_{1<=h<=H} |rho(h) - cos(h l0)|
    double cos_gap_budget = 0.0;  // C * delta (first row calibrates C)
    bool cos_gap_ok = false;
    // At coarse delta the population AR(2) density can peak at a boundary
    // of (0, pi) (no interior argmax); such rows are marked undefined.
    bool drift_defined = false;
    double population_peak = 0.0;
    double peak_drift = 0.0; // |population peak - l0|
    bool drift_ok = false;   // defined and non-increasing along the grid
};

struct LimitCheckReport {
    LimitCheckConfig config;
    std::vector<LimitCheckRow> rows;
    bool all_ok = false;
};

LimitCheckReport run_limit_checks(const LimitCheckConfig& cfg);

// JSON / CSV emission (plot-ready; one CSV row per n).
std::string rate_study_json(const RateStudyResult& result);
std::string param_rate_study_json(const ParamRateStudyResult& result);
void write_rate_study_csv(std::ostream& out, const RateStudyResult& result);
void write_param_rate_study_csv(std::ostream& out, const ParamRateStudyResult& result);

} // namespace arpeak
