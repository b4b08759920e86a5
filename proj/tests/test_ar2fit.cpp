#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "arpeak/ar2fit.hpp"
#include "arpeak/simulate.hpp"
#include "arpeak/types.hpp"
#include "oracles.hpp"

using namespace arpeak;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Ar2Fit pure_curve_fit(double delta, double lambda0) {
    Ar2Fit fit;
    fit.a1 = 2.0 * (1.0 - delta) * std::cos(lambda0);
    fit.a2 = -(1.0 - delta) * (1.0 - delta);
    fit.complex_roots = fit.a1 * fit.a1 + 4.0 * fit.a2 < 0.0;
    return fit;
}
} // namespace

TEST_CASE("fit from cosine autocorrelations hits the limit pair", "[ar2fit]") {
    const Ar2Fit fit = fit_ar2(std::cos(1.0), std::cos(2.0));
    CHECK(fit.a1 == Approx(2.0 * std::cos(1.0)).margin(1e-12));
    CHECK(fit.a1 == Approx(1.08060).margin(5e-6));
    CHECK(fit.a2 == Approx(-1.0).margin(1e-12));
    CHECK(fit.complex_roots);

    const Ar2Fit zero = fit_ar2(0.0, 0.0);
    CHECK(zero.a1 == 0.0);
    CHECK(zero.a2 == 0.0);
    CHECK_FALSE(zero.complex_roots);

    CHECK_THROWS_AS(fit_ar2(1.0, 0.9), EstimationError);
    CHECK_THROWS_AS(fit_ar2(-1.0, 0.9), EstimationError);
}

TEST_CASE("yule-walker round trip", "[ar2fit]") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> r1(-0.95, 0.95);
    std::uniform_real_distribution<double> r2(-0.95, 0.95);
    for (int i = 0; i < 200; ++i) {
        const double rho1 = r1(rng), rho2 = r2(rng);
        const Ar2Fit fit = fit_ar2(rho1, rho2);
        CHECK(fit.a1 / (1.0 - fit.a2) == Approx(rho1).margin(1e-13));
        CHECK(fit.a2 + fit.a1 * (fit.a1 / (1.0 - fit.a2)) == Approx(rho2).margin(1e-13));
    }
}

TEST_CASE("density-argmax frequency", "[ar2fit]") {
    Ar2Fit sunspot;
    sunspot.a1 = 1.386;
    sunspot.a2 = -0.691;
    sunspot.complex_roots = true;
    const FrequencyEstimate est = peak_frequency_max(sunspot);
    // arccos(1.386 * 1.691 / 2.764) = 0.5586957722...
    CHECK(est.lambda == Approx(std::acos(1.386 * 1.691 / 2.764)).margin(1e-14));
    CHECK(est.lambda == Approx(0.559).margin(1e-3));
    CHECK(est.period == Approx(kTwoPi / est.lambda).margin(1e-12));
    CHECK(est.period == Approx(11.24).margin(0.01));

    CHECK(peak_frequency_max(pure_curve_fit(0.0, 0.83)).lambda == Approx(0.83).margin(1e-13));

    Ar2Fit quarter;
    quarter.a1 = 0.0;
    quarter.a2 = -0.25;
    quarter.complex_roots = true;
    CHECK(peak_frequency_max(quarter).lambda == Approx(kPi / 2.0).margin(1e-15));
}

TEST_CASE("root-projection frequency", "[ar2fit]") {
    for (double d : {0.5, 0.1, 0.01}) {
        for (double lambda0 : {0.3, 1.2, 2.8}) {
            const FrequencyEstimate est = peak_frequency_root(pure_curve_fit(d, lambda0));
            CHECK(est.lambda == Approx(lambda0).margin(1e-12));
        }
    }

    Ar2Fit sunspot;
    sunspot.a1 = 1.386;
    sunspot.a2 = -0.691;
    sunspot.complex_roots = true;
    // 1.386 / (2 sqrt(0.691)) = 0.83367..., arccos = 0.5850760805...
    CHECK(peak_frequency_root(sunspot).lambda ==
          Approx(std::acos(1.386 / (2.0 * std::sqrt(0.691)))).margin(1e-14));
    CHECK(peak_frequency_root(sunspot).lambda == Approx(0.585).margin(1e-3));

    Ar2Fit quarter;
    quarter.a1 = 0.0;
    quarter.a2 = -0.25;
    quarter.complex_roots = true;
    CHECK(peak_frequency_root(quarter).lambda == Approx(kPi / 2.0).margin(1e-15));

    Ar2Fit real_roots = fit_ar2(0.6, 0.5); // a1^2 + 4 a2 > 0
    CHECK_FALSE(real_roots.complex_roots);
    CHECK_THROWS_AS(peak_frequency_root(real_roots), EstimationError);
}

TEST_CASE("complex roots with a boundary maximum", "[ar2fit]") {
    // |a1| < 2 sqrt(-a2) yet the density argmax argument exceeds 1: the
    // root projection exists while the density peaks at the boundary
    Ar2Fit fit;
    fit.a1 = 0.9;
    fit.a2 = -0.25;
    fit.complex_roots = fit.discriminant() < 0.0;
    REQUIRE(fit.complex_roots);
    CHECK_THROWS_AS(peak_frequency_max(fit), EstimationError);
    CHECK_NOTHROW(peak_frequency_root(fit));
    Ar2Fit flat = fit_ar2(0.0, 0.2); // a2 > 0
    CHECK_THROWS_AS(peak_frequency_max(flat), EstimationError);
}

TEST_CASE("argmax picks the tone bin", "[ar2fit]") {
    TimeSeries tone;
    tone.values.resize(64);
    for (int t = 0; t < 64; ++t)
        tone.values[t] = std::cos(kTwoPi * 5.0 * (t + 1) / 64.0);
    const Periodogram pg = compute_periodogram(tone, false);
    const FrequencyEstimate est = pgram_argmax(pg);
    CHECK(est.lambda == Approx(kTwoPi * 5.0 / 64.0).margin(1e-15));
    CHECK(est.period == Approx(64.0 / 5.0).epsilon(1e-12));
}

TEST_CASE("argmax tie-break and strategy invariance", "[ar2fit]") {
    Periodogram flat;
    flat.n = 16;
    flat.ordinates.assign(9, 1.0);
    CHECK(pgram_argmax(flat).lambda == Approx(kTwoPi / 16.0)); // smallest index wins

    const TimeSeries x = oracles::gaussian_series(96, 21);
    const FrequencyEstimate fast = pgram_argmax(compute_periodogram(x, false, Transform::fast));
    const FrequencyEstimate direct =
        pgram_argmax(compute_periodogram(x, false, Transform::direct));
    CHECK(fast.lambda == direct.lambda);
}

TEST_CASE("frequency estimates are scale invariant", "[ar2fit]") {
    const TimeSeries x = oracles::gaussian_series(256, 44, 0.3);
    TimeSeries scaled = x;
    for (double& v : scaled.values)
        v *= -3.7;
    const EstimateReport a = estimate_from_series(x);
    const EstimateReport b = estimate_from_series(scaled);
    REQUIRE(a.fit);
    REQUIRE(b.fit);
    CHECK(b.fit->a1 == Approx(a.fit->a1).margin(1e-12));
    CHECK(b.fit->a2 == Approx(a.fit->a2).margin(1e-12));
    CHECK(b.pgram_max.estimate->lambda == a.pgram_max.estimate->lambda);
    if (a.ar2_max.ok()) {
        REQUIRE(b.ar2_max.ok());
        CHECK(b.ar2_max.estimate->lambda == Approx(a.ar2_max.estimate->lambda).margin(1e-12));
    }
}

TEST_CASE("argmax and root frequencies merge along the pure curve", "[ar2fit]") {
    double prev = 1.0;
    for (double d : {0.2, 0.1, 0.05}) {
        const Ar2Fit fit = pure_curve_fit(d, 1.0);
        const double gap =
            std::abs(peak_frequency_max(fit).lambda - peak_frequency_root(fit).lambda);
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("report from a sharply peaked simulated path", "[ar2fit]") {
    const ProcessSpec spec{0.05, 1.3, DriverSpec::white(1.0)};
    SimConfig cfg;
    cfg.n = 8192;
    cfg.seed = 301;
    const TimeSeries x = simulate_process(spec, cfg);
    EstimateOptions opt;
    opt.center = false; // simulated paths are already zero mean
    const EstimateReport report = estimate_from_series(x, opt);
    REQUIRE(report.ar2_max.ok());
    CHECK(std::abs(report.ar2_max.estimate->lambda - 1.3) <= 0.05);
    CHECK(report.innovation_variance > 0.0);
}

TEST_CASE("white noise usually has no interior AR(2) peak", "[ar2fit]") {
    int peak_errors = 0;
    int pgram_ok = 0;
    for (unsigned seed = 0; seed < 50; ++seed) {
        const TimeSeries x = oracles::gaussian_series(1024, 5000 + seed);
        const EstimateReport report = estimate_from_series(x);
        if (!report.ar2_max.ok())
            ++peak_errors;
        if (report.pgram_max.ok())
            ++pgram_ok;
    }
    CHECK(pgram_ok == 50);      // the argmax estimator always answers
    CHECK(peak_errors >= 15);   // the AR(2) peak is typically undefined here
}

TEST_CASE("degenerate series yields a fit note, not an abort", "[ar2fit]") {
    TimeSeries c;
    c.values.assign(32, 3.0);
    const EstimateReport report = estimate_from_series(c);
    CHECK_FALSE(report.fit.has_value());
    CHECK(report.fit_note == "degenerate series: zero variance");
    CHECK_FALSE(report.ar2_max.ok());
    CHECK_FALSE(report.ar2_root.ok());

    TimeSeries tiny{{1.0, 2.0}, "", {}};
    CHECK_THROWS_AS(estimate_from_series(tiny), ValidationError);
}
