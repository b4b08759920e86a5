#include "arpeak/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "arpeak/ar2fit.hpp"
#include "arpeak/periodogram.hpp"
#include "arpeak/simulate.hpp"
#include "arpeak/spectral_model.hpp"

namespace arpeak {
namespace {

using nlohmann::json;

SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - fit.intercept - fit.slope * x[i];
        rss += r * r;
    }
    fit.se = n > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
    return fit;
}

// Run `replicas` independent work items, results written by index so the
// aggregate is identical no matter how the items are scheduled.
template <typename Fn>
void parallel_replicas(int replicas, int threads, Fn&& work) {
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, replicas));
    if (nthreads == 1) {
        for (int r = 0; r < replicas; ++r)
            work(r);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) {
        pool.emplace_back([&] {
            for (int r = next.fetch_add(1); r < replicas; r = next.fetch_add(1))
                work(r);
        });
    }
    for (auto& t : pool)
        t.join();
}

// Per-replica Yule-Walker fit through the Fourier-grid ACF estimator.
struct ReplicaFit {
    bool fit_ok = false;
    bool peak_ok = false;
    double a1 = 0.0;
    double a2 = 0.0;
    double lambda = 0.0;
};

ReplicaFit estimate_replica(const ProcessSpec& spec, int n, std::uint64_t seed) {
    SimConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    const TimeSeries x = simulate_process(spec, cfg);
    const Periodogram pg = compute_periodogram(x, /*center=*/false);
    const std::vector<double> g = gamma_hat(pg, 2);

    ReplicaFit out;
    if (!(g[0] > 0.0))
        return out;
    try {
        const Ar2Fit fit = fit_ar2(g[1] / g[0], g[2] / g[0]);
        out.fit_ok = true;
        out.a1 = fit.a1;
        out.a2 = fit.a2;
        out.lambda = peak_frequency_max(fit).lambda;
        out.peak_ok = true;
    } catch (const EstimationError&) {
        // recorded as a failure; the estimator is undefined here
    }
    return out;
}

std::vector<double> log_grid(const std::vector<int>& n_grid) {
    std::vector<double> out;
    out.reserve(n_grid.size());
    for (int n : n_grid)
        out.push_back(std::log(static_cast<double>(n)));
    return out;
}

json slope_json(const SlopeFit& fit) {
    return {{"slope", fit.slope}, {"stderr", fit.se}, {"intercept", fit.intercept}};
}

json config_json(const RateStudyConfig& cfg) {
    return {{"alpha", cfg.alpha},
            {"c_delta", cfg.c_delta},
            {"lambda0", cfg.lambda0},
            {"driver", cfg.driver.describe()},
            {"n_grid", cfg.n_grid},
            {"replicas", cfg.replicas},
            {"seed", cfg.seed}};
}

} // namespace

void RateStudyConfig::validate() const {
    if (!(alpha >= 0.0 && alpha < 1.0 / 3.0))
        throw ValidationError("rate study: alpha must lie in [0, 1/3)");
    if (!(c_delta > 0.0))
        throw ValidationError("rate study: c_delta must be > 0");
    driver.validate();
    if (n_grid.size() < 4)
        throw ValidationError("rate study: n_grid needs at least 4 points");
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
        if (n_grid[i] >= n_grid[i + 1])
            throw ValidationError("rate study: n_grid must be strictly increasing");
    if (replicas < 1)
        throw ValidationError("rate study: replicas must be >= 1");
    for (int n : n_grid) {
        if (n < 8)
            throw ValidationError("rate study: every n must be >= 8");
        const double d = delta_for(n);
        if (!(d > 0.0 && d < 1.0))
            throw ValidationError("rate study: delta_n must lie in (0, 1) over the whole grid");
        ProcessSpec probe{d, lambda0, driver};
        probe.validate();
    }
}

double RateStudyConfig::delta_for(int n) const {
    return c_delta * std::pow(static_cast<double>(n), -alpha);
}

RateStudyResult run_rate_study(const RateStudyConfig& cfg) {
    cfg.validate();
    RateStudyResult result;
    result.config = cfg;

    for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
        const int n = cfg.n_grid[gi];
        RatePoint point;
        point.n = n;
        point.delta_n = cfg.delta_for(n);
        const ProcessSpec spec{point.delta_n, cfg.lambda0, cfg.driver};
        point.target = population_peak(spec);

        std::vector<ReplicaFit> fits(cfg.replicas);
        parallel_replicas(cfg.replicas, cfg.threads, [&](int r) {
            fits[r] = estimate_replica(spec, n, derive_seed(cfg.seed, gi, r));
        });

        double sq = 0.0, sum = 0.0;
        int ok = 0;
        for (const ReplicaFit& f : fits) {
            if (!f.peak_ok)
                continue;
            const double e = f.lambda - point.target;
            sq += e * e;
            sum += e;
            ++ok;
        }
        point.failures = cfg.replicas - ok;
        if (ok > 0) {
            point.rmse = std::sqrt(sq / ok);
            point.bias = sum / ok;
        }
        if (point.failures > cfg.replicas / 5) {
            result.flagged = true;
            result.warning = "more than 20% undefined fits at n = " + std::to_string(n);
        }
        result.points.push_back(point);
    }

    std::vector<double> lr;
    lr.reserve(result.points.size());
    for (const RatePoint& p : result.points)
        lr.push_back(std::log(p.rmse));
    result.slope = fit_line(log_grid(cfg.n_grid), lr);
    return result;
}

ParamRateStudyResult run_param_rate_study(const RateStudyConfig& cfg) {
    cfg.validate();
    ParamRateStudyResult result;
    result.config = cfg;

    for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
        const int n = cfg.n_grid[gi];
        ParamRatePoint point;
        point.n = n;
        point.delta_n = cfg.delta_for(n);
        const ProcessSpec spec{point.delta_n, cfg.lambda0, cfg.driver};
        const auto [a1, a2] = population_ar2(spec);
        point.target_a1 = a1;
        point.target_a2 = a2;

        std::vector<ReplicaFit> fits(cfg.replicas);
        parallel_replicas(cfg.replicas, cfg.threads, [&](int r) {
            fits[r] = estimate_replica(spec, n, derive_seed(cfg.seed, gi, r));
        });

        double sq1 = 0.0, sq2 = 0.0, s1 = 0.0, s2 = 0.0;
        int ok = 0;
        for (const ReplicaFit& f : fits) {
            if (!f.fit_ok)
                continue;
            const double e1 = f.a1 - point.target_a1;
            const double e2 = f.a2 - point.target_a2;
            sq1 += e1 * e1;
            sq2 += e2 * e2;
            s1 += e1;
            s2 += e2;
            ++ok;
        }
        point.failures = cfg.replicas - ok;
        if (ok > 0) {
            point.rmse_a1 = std::sqrt(sq1 / ok);
            point.rmse_a2 = std::sqrt(sq2 / ok);
            point.bias_a1 = s1 / ok;
            point.bias_a2 = s2 / ok;
        }
        if (point.failures > cfg.replicas / 5) {
            result.flagged = true;
            result.warning = "more than 20% degenerate fits at n = " + std::to_string(n);
        }
        result.points.push_back(point);
    }

    std::vector<double> l1, l2;
    for (const ParamRatePoint& p : result.points) {
        l1.push_back(std::log(p.rmse_a1));
        l2.push_back(std::log(p.rmse_a2));
    }
    const std::vector<double> ln = log_grid(cfg.n_grid);
    result.slope_a1 = fit_line(ln, l1);
    result.slope_a2 = fit_line(ln, l2);
    return result;
}

LimitCheckReport run_limit_checks(const LimitCheckConfig& cfg) {
    if (cfg.delta_grid.empty())
        throw ValidationError("limit checks: empty delta grid");
    for (std::size_t i = 0; i + 1 < cfg.delta_grid.size(); ++i)
        if (cfg.delta_grid[i] <= cfg.delta_grid[i + 1])
            throw ValidationError("limit checks: delta grid must descend toward 0");

    LimitCheckReport report;
    report.config = cfg;

    const double c = std::cos(cfg.lambda0);
    const double fU_peak = driver_density(cfg.driver, cfg.lambda0);
    const double scaled_limit = fU_peak / (4.0 * (1.0 - c * c));
    const double fmin = driver_density_min(cfg.driver);
    const double fmax = driver_density_max(cfg.driver);
    const double cmax = std::max(c, -c); // max{cos(l0), cos(pi + l0)}

    double envelope_c = 0.0;
    double prev_gap = 0.0;
    double prev_drift = 0.0;
    bool have_prev_drift = false;
    bool all_ok = true;

    for (std::size_t i = 0; i < cfg.delta_grid.size(); ++i) {
        const double d = cfg.delta_grid[i];
        const ProcessSpec spec{d, cfg.lambda0, cfg.driver};
        LimitCheckRow row;
        row.delta = d;

        row.peak_scaled = d * d * spectral_density(spec, cfg.lambda0);
        row.peak_scaled_limit = scaled_limit;
        row.peak_ok = std::abs(row.peak_scaled / scaled_limit - 1.0) <= 2.0 * d;

        const TheoreticalAcf acf = theoretical_acf(spec, cfg.max_lag);
        row.gamma0 = acf.gamma[0];
        const double Q = peak_kernel_integral(d, cfg.lambda0);
        row.bracket_lo = 2.0 * (fmin / 4.0) * Q;
        row.bracket_hi = 2.0 * (fmax / (1.0 - cmax * cmax)) * Q;
        row.bracket_ok = row.bracket_lo <= row.gamma0 && row.gamma0 <= row.bracket_hi;

        for (int h = 1; h <= cfg.max_lag; ++h)
            row.cos_gap = std::max(row.cos_gap, std::abs(acf.rho[h] - std::cos(h * cfg.lambda0)));
        if (i == 0)
            envelope_c = cfg.envelope_safety * row.cos_gap / d;
        row.cos_gap_budget = std::max(envelope_c * d, cfg.cos_gap_floor);
        row.cos_gap_ok = row.cos_gap <= row.cos_gap_budget &&
                         (i == 0 || row.cos_gap <= std::max(prev_gap, cfg.cos_gap_floor));
        prev_gap = row.cos_gap;

        try {
            row.population_peak = population_peak(spec);
            row.drift_defined = true;
            row.peak_drift = std::abs(row.population_peak - cfg.lambda0);
            row.drift_ok = !have_prev_drift || row.peak_drift <= prev_drift;
            prev_drift = row.peak_drift;
            have_prev_drift = true;
        } catch (const EstimationError&) {
            row.drift_ok = false;
        }

        all_ok = all_ok && row.peak_ok && row.bracket_ok && row.cos_gap_ok && row.drift_ok;
        report.rows.push_back(row);
    }
    report.all_ok = all_ok;
    return report;
}

std::string rate_study_json(const RateStudyResult& result) {
    json points = json::array();
    for (const RatePoint& p : result.points)
        points.push_back({{"n", p.n},
                          {"delta_n", p.delta_n},
                          {"target", p.target},
                          {"rmse", p.rmse},
                          {"bias", p.bias},
                          {"failures", p.failures}});
    json doc = {{"config", config_json(result.config)},
                {"points", points},
                {"slope", slope_json(result.slope)},
                {"flagged", result.flagged}};
    if (result.flagged)
        doc["warning"] = result.warning;
    return doc.dump(2);
}

std::string param_rate_study_json(const ParamRateStudyResult& result) {
    json points = json::array();
    for (const ParamRatePoint& p : result.points)
        points.push_back({{"n", p.n},
                          {"delta_n", p.delta_n},
                          {"target_a1", p.target_a1},
                          {"target_a2", p.target_a2},
                          {"rmse_a1", p.rmse_a1},
                          {"rmse_a2", p.rmse_a2},
                          {"bias_a1", p.bias_a1},
                          {"bias_a2", p.bias_a2},
                          {"failures", p.failures}});
    json doc = {{"config", config_json(result.config)},
                {"points", points},
                {"slope_a1", slope_json(result.slope_a1)},
                {"slope_a2", slope_json(result.slope_a2)},
                {"flagged", result.flagged}};
    if (result.flagged)
        doc["warning"] = result.warning;
    return doc.dump(2);
}

void write_rate_study_csv(std::ostream& out, const RateStudyResult& result) {
    out << "n,delta_n,target,rmse,bias,failures\n";
    out.precision(17);
    for (const RatePoint& p : result.points)
        out << p.n << ',' << p.delta_n << ',' << p.target << ',' << p.rmse << ',' << p.bias
            << ',' << p.failures << '\n';
}

void write_param_rate_study_csv(std::ostream& out, const ParamRateStudyResult& result) {
    out << "n,delta_n,target_a1,target_a2,rmse_a1,rmse_a2,bias_a1,bias_a2,failures\n";
    out.precision(17);
    for (const ParamRatePoint& p : result.points)
        out << p.n << ',' << p.delta_n << ',' << p.target_a1 << ',' << p.target_a2 << ','
            << p.rmse_a1 << ',' << p.rmse_a2 << ',' << p.bias_a1 << ',' << p.bias_a2 << ','
            << p.failures << '\n';
}

} // namespace arpeak
