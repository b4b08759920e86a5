#include "arpeak/simulate.hpp"

#include <cmath>
#include <random>

namespace arpeak {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_a, std::uint64_t stream_b) {
    // splitmix64 over the mixed words; independent streams per (a, b)
    std::uint64_t z = seed;
    for (std::uint64_t w : {stream_a + 1, stream_b + 1}) {
        z += 0x9e3779b97f4a7c15ULL * w;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
    }
    return z;
}

int auto_burn_in(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw ValidationError("auto_burn_in: delta must lie in (0, 1)");
    const double needed = std::ceil(std::log(1e-6) / std::log1p(-delta));
    if (needed > 1e7)
        throw ValidationError("auto_burn_in: delta too small, transient would exceed 1e7 steps");
    return static_cast<int>(needed);
}

TimeSeries simulate_driver(const DriverSpec& driver, int m, std::uint64_t seed) {
    driver.validate();
    if (m < 1)
        throw ValidationError("simulate_driver: m must be >= 1");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double sd = std::sqrt(driver.sigma2);

    TimeSeries out;
    out.values.resize(m);
    out.seed = seed;
    out.origin = driver.describe();

    switch (driver.kind) {
    case DriverSpec::Kind::white:
        for (double& v : out.values)
            v = sd * normal(rng);
        break;
    case DriverSpec::Kind::ar1: {
        const double phi = driver.coeff;
        // stationary start: U_1 ~ N(0, sigma2 / (1 - phi^2))
        double prev = sd / std::sqrt(1.0 - phi * phi) * normal(rng);
        out.values[0] = prev;
        for (int t = 1; t < m; ++t) {
            prev = phi * prev + sd * normal(rng);
            out.values[t] = prev;
        }
        break;
    }
    case DriverSpec::Kind::ma1: {
        const double theta = driver.coeff;
        double eps_prev = sd * normal(rng);
        for (int t = 0; t < m; ++t) {
            const double eps = sd * normal(rng);
            out.values[t] = eps + theta * eps_prev;
            eps_prev = eps;
        }
        break;
    }
    }
    return out;
}

std::vector<double> ar2_filter(const ProcessSpec& spec, std::span<const double> driver_path) {
    spec.validate();
    const double a1 = 2.0 * (1.0 - spec.delta) * std::cos(spec.lambda0);
    const double a2 = -(1.0 - spec.delta) * (1.0 - spec.delta);
    std::vector<double> x(driver_path.size());
    double x1 = 0.0, x2 = 0.0; // zero initial state; burn-in absorbs it
    for (std::size_t t = 0; t < x.size(); ++t) {
        x[t] = a1 * x1 + a2 * x2 + driver_path[t];
        x2 = x1;
        x1 = x[t];
    }
    return x;
}

TimeSeries simulate_process(const ProcessSpec& spec, const SimConfig& cfg) {
    spec.validate();
    cfg.validate();
    const int burn = cfg.burn_in ? *cfg.burn_in : auto_burn_in(spec.delta);

    const TimeSeries u = simulate_driver(spec.driver, cfg.n + burn, cfg.seed);
    std::vector<double> x = ar2_filter(spec, u.values);

    TimeSeries out;
    out.values.assign(x.begin() + burn, x.end());
    out.seed = cfg.seed;
    out.origin = "simulated";
    return out;
}

} // namespace arpeak
