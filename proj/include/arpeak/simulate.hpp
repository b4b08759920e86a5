#pragma once

#include <cstdint>
#include <span>

#include "arpeak/types.hpp"

namespace arpeak {

// Zero-mean stationary draw of the driver process, Gaussian innovations.
// ar1/ma1 start from their stationary distribution. Deterministic per seed.
TimeSeries simulate_driver(const DriverSpec& driver, int m, std::uint64_t seed);

// Applies X_t = 2(1-d)cos(l0) X_{t-1} - (1-d)^2 X_{t-2} + U_t to a fresh
// driver path of length n + burn_in and discards the burn-in.
TimeSeries simulate_process(const ProcessSpec& spec, const SimConfig& cfg);

// The bare filter from zero initial state; test hook for injected driver
// paths (zero input, linearity).
std::vector<double> ar2_filter(const ProcessSpec& spec, std::span<const double> driver_path);

// ceil(ln 1e-6 / ln(1-delta)): transient below 1e-6 relative. Throws
// ValidationError when the required length exceeds 1e7.
int auto_burn_in(double delta);

// splitmix64-based stream derivation for deterministic parallel replicas.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_a, std::uint64_t stream_b = 0);

} // namespace arpeak
