#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "arpeak/simulate.hpp"
#include "arpeak/spectral_model.hpp"
#include "arpeak/types.hpp"

using namespace arpeak;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double sample_mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double sample_acov(const std::vector<double>& v, int h) {
    const double m = sample_mean(v);
    double s = 0.0;
    for (std::size_t t = 0; t + h < v.size(); ++t)
        s += (v[t] - m) * (v[t + h] - m);
    return s / v.size();
}

} // namespace

TEST_CASE("driver moments match their models", "[simulate]") {
    const int m = 100000;

    const TimeSeries white = simulate_driver(DriverSpec::white(1.0), m, 11);
    CHECK(std::abs(sample_acov(white.values, 0) - 1.0) <= 0.03);
    CHECK(std::abs(sample_mean(white.values)) <= 0.02);

    const TimeSeries ar = simulate_driver(DriverSpec::ar1(0.5, 1.0), m, 12);
    CHECK(std::abs(sample_acov(ar.values, 1) / sample_acov(ar.values, 0) - 0.5) <= 0.02);

    const TimeSeries ma = simulate_driver(DriverSpec::ma1(0.4, 1.0), m, 13);
    const double g0 = sample_acov(ma.values, 0);
    CHECK(std::abs(sample_acov(ma.values, 2) / g0) <= 0.02); // MA(1) cuts off after lag 1
    CHECK(std::abs(sample_acov(ma.values, 1) / g0 - 0.4 / 1.16) <= 0.02);
}

TEST_CASE("filter of a zero driver path is zero", "[simulate]") {
    const ProcessSpec spec{0.5, kPi / 2.0, DriverSpec::white(1.0)};
    const std::vector<double> zeros(64, 0.0);
    for (double v : ar2_filter(spec, zeros))
        CHECK(v == 0.0);
}

TEST_CASE("filter is linear in the driver path", "[simulate]") {
    const ProcessSpec spec{0.2, 1.0, DriverSpec::white(1.0)};
    const TimeSeries u = simulate_driver(spec.driver, 256, 99);
    std::vector<double> doubled = u.values;
    for (double& v : doubled)
        v *= 2.0;
    const std::vector<double> x = ar2_filter(spec, u.values);
    const std::vector<double> x2 = ar2_filter(spec, doubled);
    for (std::size_t t = 0; t < x.size(); ++t)
        CHECK(x2[t] == 2.0 * x[t]); // doubling commutes with rounding, exactly
}

TEST_CASE("identical configuration reproduces the path bit for bit", "[simulate]") {
    const ProcessSpec spec{0.1, 1.0, DriverSpec::ar1(0.3, 1.0)};
    SimConfig cfg;
    cfg.n = 512;
    cfg.seed = 20240401;
    const TimeSeries a = simulate_process(spec, cfg);
    const TimeSeries b = simulate_process(spec, cfg);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t t = 0; t < a.values.size(); ++t)
        CHECK(a.values[t] == b.values[t]);
}

TEST_CASE("sample variance matches the quadrature variance", "[simulate]") {
    const ProcessSpec spec{0.1, 1.0, DriverSpec::white(1.0)};
    SimConfig cfg;
    cfg.n = 200000;
    cfg.seed = 7;
    const TimeSeries x = simulate_process(spec, cfg);
    const double g0 = theoretical_acf(spec, 2).gamma[0];
    CHECK(std::abs(sample_acov(x.values, 0) / g0 - 1.0) <= 0.10);
}

TEST_CASE("low-lag sample autocovariances sit within batched standard errors", "[simulate]") {
    const ProcessSpec spec{0.05, 1.3, DriverSpec::white(1.0)};
    SimConfig cfg;
    cfg.n = 200000;
    cfg.seed = 31;
    const TimeSeries x = simulate_process(spec, cfg);
    const TheoreticalAcf acf = theoretical_acf(spec, 2);

    const int batches = 50;
    const int bsize = cfg.n / batches;
    for (int h = 0; h <= 2; ++h) {
        // batch means of x_t x_{t+h}; their spread estimates the error of
        // the full-sample mean
        std::vector<double> bm(batches, 0.0);
        for (int b = 0; b < batches; ++b) {
            double s = 0.0;
            int count = 0;
            for (int t = b * bsize; t < (b + 1) * bsize - h; ++t, ++count)
                s += x.values[t] * x.values[t + h];
            bm[b] = s / count;
        }
        const double mean = sample_mean(bm);
        double var = 0.0;
        for (double v : bm)
            var += (v - mean) * (v - mean);
        var /= batches - 1;
        const double se = std::sqrt(var / batches);
        CHECK(std::abs(mean - acf.gamma[h]) <= 5.0 * se);
    }
}

TEST_CASE("automatic burn-in follows the decay envelope", "[simulate]") {
    CHECK(auto_burn_in(0.5) == 20); // ceil(ln 1e-6 / ln 0.5)
    CHECK(std::pow(1.0 - 0.1, auto_burn_in(0.1)) < 1e-6);
    CHECK_THROWS_AS(auto_burn_in(1e-8), ValidationError);
}

TEST_CASE("configuration validation", "[simulate]") {
    SimConfig bad;
    bad.n = 4;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad.n = 64;
    bad.burn_in = -1;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    CHECK_THROWS_AS(simulate_driver(DriverSpec::white(1.0), 0, 1), ValidationError);
}

TEST_CASE("seed derivation separates streams", "[simulate]") {
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 1, 0));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
    CHECK(derive_seed(9, 4, 5) == derive_seed(9, 4, 5));
}
