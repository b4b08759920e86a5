#include "arpeak/periodogram.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace arpeak {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cd = std::complex<double>;

std::vector<cd> dft_direct(const std::vector<cd>& x) {
    const std::size_t n = x.size();
    std::vector<cd> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cd sum{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t)
            sum += x[t] * std::polar(1.0, -kTwoPi * static_cast<double>(k * t % n) / n);
        out[k] = sum;
    }
    return out;
}

void fft_pow2_inplace(std::vector<cd>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -kTwoPi / static_cast<double>(len);
        const cd wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cd w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cd u = a[i + j];
                const cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::size_t smallest_prime_factor(std::size_t n) {
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return p;
    return n;
}

// Cooley-Tukey over the smallest prime factor; prime lengths fall back to
// the direct sum, so composite n costs O(n log n) overall.
std::vector<cd> fft_any(const std::vector<cd>& x) {
    const std::size_t n = x.size();
    if (n <= 1)
        return x;
    if ((n & (n - 1)) == 0) {
        std::vector<cd> a = x;
        fft_pow2_inplace(a);
        return a;
    }
    const std::size_t p = smallest_prime_factor(n);
    if (p == n)
        return dft_direct(x);

    const std::size_t m = n / p;
    std::vector<std::vector<cd>> sub(p);
    for (std::size_t r = 0; r < p; ++r) {
        sub[r].resize(m);
        for (std::size_t t = 0; t < m; ++t)
            sub[r][t] = x[t * p + r];
        sub[r] = fft_any(sub[r]);
    }
    std::vector<cd> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cd sum{0.0, 0.0};
        for (std::size_t r = 0; r < p; ++r)
            sum += std::polar(1.0, -kTwoPi * static_cast<double>(k * r % n) / n) * sub[r][k % m];
        out[k] = sum;
    }
    return out;
}

} // namespace

double Periodogram::fourier_frequency(int j) const { return kTwoPi * j / n; }

double Periodogram::at_pi_or_zero() const {
    return n % 2 == 0 ? ordinates[static_cast<std::size_t>(n / 2)] : 0.0;
}

Periodogram compute_periodogram(const TimeSeries& x, bool center, Transform transform) {
    // n >= 2 here; the n >= 8 floor applies to the estimation entry points
    const int n = x.size();
    if (n < 2)
        throw ValidationError("compute_periodogram: need at least two observations");
    for (double v : x.values)
        if (!std::isfinite(v))
            throw ValidationError("compute_periodogram: non-finite values");

    double mean = 0.0;
    if (center)
        mean = std::accumulate(x.values.begin(), x.values.end(), 0.0) / n;

    std::vector<cd> input(n);
    for (int t = 0; t < n; ++t)
        input[t] = cd{x.values[t] - mean, 0.0};

    std::vector<cd> spectrum;
    switch (transform) {
    case Transform::direct:
        spectrum = dft_direct(input);
        break;
    case Transform::fast:
    case Transform::automatic:
        spectrum = fft_any(input);
        break;
    }

    Periodogram pg;
    pg.n = n;
    pg.centered = center;
    pg.ordinates.resize(static_cast<std::size_t>(n / 2) + 1);
    // The transform computes sum_t x_t e^{-i l (t-1)} while the ordinate is
    // defined with e^{-i l t}; the phase factor drops in the squared modulus.
    for (int j = 0; j <= n / 2; ++j)
        pg.ordinates[j] = std::norm(spectrum[j]) / (kTwoPi * n);
    return pg;
}

std::vector<double> gamma_hat(const Periodogram& pg, int max_lag) {
    if (max_lag >= pg.n)
        throw ValidationError("gamma_hat: max_lag must satisfy H < n");
    if (max_lag < 0)
        throw ValidationError("gamma_hat: max_lag must be >= 0");
    const int n = pg.n;
    const int N = n / 2;
    std::vector<double> out(static_cast<std::size_t>(max_lag) + 1);
    for (int h = 0; h <= max_lag; ++h) {
        double s = 0.0;
        // pairs (j, -j) for j = 1..N; for even n the pair is (-N, N), both
        // at frequency pi, so the pi ordinate genuinely enters twice
        for (int j = 1; j <= N; ++j)
            s += 2.0 * pg.ordinates[j] * std::cos(kTwoPi * j * h / n);
        out[h] = kTwoPi / n * s;
    }
    return out;
}

std::vector<double> gamma_tilde(const TimeSeries& x, int max_lag) {
    const int n = x.size();
    if (max_lag >= n)
        throw ValidationError("gamma_tilde: max_lag must satisfy H < n");
    if (max_lag < 0)
        throw ValidationError("gamma_tilde: max_lag must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(max_lag) + 1);
    for (int h = 0; h <= max_lag; ++h) {
        double s = 0.0;
        for (int t = 0; t + h < n; ++t)
            s += x.values[t] * x.values[t + h];
        out[h] = s / n;
    }
    return out;
}

AcfEstimates acf_estimates(const TimeSeries& x, int max_lag, bool center, Transform transform) {
    TimeSeries work = x;
    if (center) {
        const double mean =
            std::accumulate(work.values.begin(), work.values.end(), 0.0) / work.size();
        for (double& v : work.values)
            v -= mean;
    }
    AcfEstimates est;
    est.gamma_hat = gamma_hat(compute_periodogram(work, false, transform), max_lag);
    est.gamma_tilde = gamma_tilde(work, max_lag);
    return est;
}

double acf_identity_residual(const TimeSeries& x, int h) {
    const int n = x.size();
    if (h < 0 || h >= n)
        throw ValidationError("acf_identity_residual: h must satisfy 0 <= h < n");

    const Periodogram pg = compute_periodogram(x, false);
    const double lhs = gamma_hat(pg, h)[h];
    const std::vector<double> gt = gamma_tilde(x, h >= 1 ? std::max(h, n - h) : 0);

    const double wrap = h >= 1 ? gt[n - h] : 0.0;
    const double sign = h % 2 == 0 ? 1.0 : -1.0; // cos(pi h)
    const double correction = kTwoPi / n * (pg.ordinates[0] - pg.at_pi_or_zero() * sign);
    return lhs - (gt[h] + wrap - correction);
}

} // namespace arpeak
