// Command-line front end: fit a series from CSV, simulate the near-pole
// family, emit plot-ready periodogram tables, run the Monte Carlo rate
// study. Exit codes: 0 success, 2 validation, 3 parse, 4 numeric.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arpeak/ar2fit.hpp"
#include "arpeak/csv.hpp"
#include "arpeak/experiments.hpp"
#include "arpeak/periodogram.hpp"
#include "arpeak/simulate.hpp"
#include "arpeak/types.hpp"

namespace {

using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitNumeric = 4;

arpeak::DriverSpec parse_driver(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':'))
        parts.push_back(tok);
    if (parts.empty())
        throw arpeak::ValidationError("driver: empty specification");

    auto num = [&](std::size_t i) {
        try {
            std::size_t used = 0;
            const double v = std::stod(parts[i], &used);
            if (used != parts[i].size())
                throw std::invalid_argument(parts[i]);
            return v;
        } catch (const std::exception&) {
            throw arpeak::ValidationError("driver: bad number '" + parts[i] + "'");
        }
    };

    arpeak::DriverSpec driver;
    if (parts[0] == "white") {
        if (parts.size() > 2)
            throw arpeak::ValidationError("driver: white takes at most one parameter (sigma2)");
        driver = arpeak::DriverSpec::white(parts.size() == 2 ? num(1) : 1.0);
    } else if (parts[0] == "ar1" || parts[0] == "ma1") {
        if (parts.size() != 3)
            throw arpeak::ValidationError("driver: " + parts[0] + " needs coefficient and sigma2");
        driver = parts[0] == "ar1" ? arpeak::DriverSpec::ar1(num(1), num(2))
                                   : arpeak::DriverSpec::ma1(num(1), num(2));
    } else {
        throw arpeak::ValidationError("driver: unknown kind '" + parts[0] +
                                      "' (expected white, ar1 or ma1)");
    }
    driver.validate();
    return driver;
}

json method_json(const arpeak::MethodResult& m) {
    if (m.ok())
        return {{"status", "ok"}, {"lambda", m.estimate->lambda}, {"period", m.estimate->period}};
    return {{"status", "error"}, {"note", m.note}};
}

json report_json(const arpeak::EstimateReport& report, const std::string& path) {
    json doc = {
        {"n", report.n},
        {"centered", report.centered},
        {"acf", report.acf_source == arpeak::AcfSource::fourier ? "hat" : "tilde"},
        {"acf0", report.acf0},
        {"estimates",
         {{"ar2_max", method_json(report.ar2_max)},
          {"ar2_root", method_json(report.ar2_root)},
          {"pgram_argmax", method_json(report.pgram_max)}}},
        {"data", {{"path", path}, {"rows", report.n}}},
    };
    if (report.fit) {
        doc["a1"] = report.fit->a1;
        doc["a2"] = report.fit->a2;
        doc["rho1"] = report.fit->rho1;
        doc["rho2"] = report.fit->rho2;
        doc["discriminant"] = report.fit->discriminant();
        doc["complex_roots"] = report.fit->complex_roots;
        doc["innovation_variance"] = report.innovation_variance;
    }
    return doc;
}

struct FitFlags {
    std::string path;
    bool raw = false;
    std::string acf = "hat";

    arpeak::EstimateOptions options() const {
        arpeak::EstimateOptions opt;
        opt.center = !raw;
        opt.acf_source = acf == "hat" ? arpeak::AcfSource::fourier : arpeak::AcfSource::sample;
        return opt;
    }
};

int cmd_fit(const FitFlags& flags) {
    const arpeak::Dataset ds = arpeak::read_label_value_csv(flags.path);
    const arpeak::TimeSeries x = ds.to_series(flags.path);
    const arpeak::EstimateReport report = arpeak::estimate_from_series(x, flags.options());
    if (!report.fit)
        throw arpeak::NumericError(report.fit_note);
    std::cout << report_json(report, flags.path).dump(2) << "\n";
    return 0;
}

struct SimulateFlags {
    double delta = 0.0;
    double lambda0 = 0.0;
    std::string driver = "white:1";
    int n = 0;
    std::uint64_t seed = 0;
    std::string burn_in = "auto";
    std::string out;
};

int cmd_simulate(const SimulateFlags& flags) {
    arpeak::ProcessSpec spec{flags.delta, flags.lambda0, parse_driver(flags.driver)};
    arpeak::SimConfig cfg;
    cfg.n = flags.n;
    cfg.seed = flags.seed;
    if (flags.burn_in != "auto") {
        try {
            cfg.burn_in = std::stoi(flags.burn_in);
        } catch (const std::exception&) {
            throw arpeak::ValidationError("--burn-in expects 'auto' or an integer");
        }
    }
    const arpeak::TimeSeries x = arpeak::simulate_process(spec, cfg);

    std::ofstream out(flags.out);
    if (!out)
        throw arpeak::ValidationError("cannot open output file " + flags.out);
    out.precision(17);
    out << "t,value\n";
    for (int t = 0; t < x.size(); ++t)
        out << (t + 1) << ',' << x.values[t] << '\n';
    return 0;
}

struct PeriodogramFlags {
    std::string path;
    bool raw = false;
    bool overlay = false;
    std::string acf = "hat";
    std::string out;
};

int cmd_periodogram(const PeriodogramFlags& flags) {
    const arpeak::Dataset ds = arpeak::read_label_value_csv(flags.path);
    const arpeak::TimeSeries x = ds.to_series(flags.path);
    arpeak::require_estimable(x);

    const bool center = !flags.raw;
    const arpeak::Periodogram pg = arpeak::compute_periodogram(x, center);

    json summary = {{"n", pg.n}, {"out", flags.out}, {"columns", json::array({"lambda", "I_n"})}};
    std::optional<arpeak::Ar2Fit> fit;
    double sigma2 = 0.0;
    if (flags.overlay) {
        arpeak::EstimateOptions opt;
        opt.center = center;
        opt.acf_source =
            flags.acf == "hat" ? arpeak::AcfSource::fourier : arpeak::AcfSource::sample;
        const arpeak::EstimateReport report = arpeak::estimate_from_series(x, opt);
        if (!report.fit)
            throw arpeak::NumericError(report.fit_note);
        fit = report.fit;
        sigma2 = report.innovation_variance;
        summary["columns"].push_back("f_fit");
        summary["a1"] = fit->a1;
        summary["a2"] = fit->a2;
        if (!fit->complex_roots)
            summary["warning"] = "fitted AR(2) has real roots: density peaks at 0 or pi";
    }

    std::ofstream out(flags.out);
    if (!out)
        throw arpeak::ValidationError("cannot open output file " + flags.out);
    out.precision(17);
    out << "lambda,I_n" << (fit ? ",f_fit" : "") << "\n";
    for (int j = 0; j <= pg.n / 2; ++j) {
        out << pg.fourier_frequency(j) << ',' << pg.ordinates[j];
        if (fit)
            out << ',' << arpeak::ar2_spectral_density(fit->a1, fit->a2, sigma2,
                                                       pg.fourier_frequency(j));
        out << '\n';
    }
    std::cout << summary.dump(2) << "\n";
    return 0;
}

struct RatesFlags {
    double alpha = 0.25;
    double c_delta = 1.0;
    double lambda0 = 1.0;
    std::string driver = "white:1";
    std::string n_grid = "512,1024,2048,4096,8192";
    int replicas = 500;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out_json;
    std::string out_csv;
};

int cmd_rates(const RatesFlags& flags) {
    arpeak::RateStudyConfig cfg;
    cfg.alpha = flags.alpha;
    cfg.c_delta = flags.c_delta;
    cfg.lambda0 = flags.lambda0;
    cfg.driver = parse_driver(flags.driver);
    cfg.replicas = flags.replicas;
    cfg.seed = flags.seed;
    cfg.threads = flags.threads;

    cfg.n_grid.clear();
    std::stringstream ss(flags.n_grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            cfg.n_grid.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw arpeak::ValidationError("--n-grid: bad entry '" + tok + "'");
        }
    }

    const arpeak::RateStudyResult result = arpeak::run_rate_study(cfg);
    const std::string doc = arpeak::rate_study_json(result);
    std::cout << doc << "\n";
    if (!flags.out_json.empty()) {
        std::ofstream out(flags.out_json);
        if (!out)
            throw arpeak::ValidationError("cannot open output file " + flags.out_json);
        out << doc << "\n";
    }
    if (!flags.out_csv.empty()) {
        std::ofstream out(flags.out_csv);
        if (!out)
            throw arpeak::ValidationError("cannot open output file " + flags.out_csv);
        arpeak::write_rate_study_csv(out, result);
    }
    // a flagged study still exits 0: the result, warning included, is the answer
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AR(2)-based dominant-periodicity estimation for sharply peaked spectra"};
    app.require_subcommand(1);

    FitFlags fit_flags;
    auto* fit = app.add_subcommand("fit", "Fit an AR(2) and report the peak-frequency estimates");
    fit->add_option("path", fit_flags.path, "two-column CSV (header, then label,value)")
        ->required();
    fit->add_flag("--raw,!--centered", fit_flags.raw, "skip mean subtraction (default: centered)");
    fit->add_option("--acf", fit_flags.acf, "ACF estimator feeding the fit")
        ->check(CLI::IsMember({"hat", "tilde"}))
        ->default_val("hat");

    SimulateFlags sim_flags;
    auto* sim = app.add_subcommand("simulate", "Draw a sample path from the near-pole family");
    sim->add_option("--delta", sim_flags.delta, "damping in (0,1)")->required();
    sim->add_option("--lambda0", sim_flags.lambda0, "peak frequency in (0,pi)")->required();
    sim->add_option("--driver", sim_flags.driver, "white:s2 | ar1:phi:s2 | ma1:theta:s2")
        ->default_val("white:1");
    sim->add_option("--n", sim_flags.n, "sample size")->required();
    sim->add_option("--seed", sim_flags.seed, "RNG seed")->default_val("0");
    sim->add_option("--burn-in", sim_flags.burn_in, "'auto' or explicit length")
        ->default_val("auto");
    sim->add_option("--out", sim_flags.out, "output CSV (t,value)")->required();

    PeriodogramFlags pg_flags;
    auto* pgc = app.add_subcommand("periodogram", "Emit the periodogram table for plotting");
    pgc->add_option("path", pg_flags.path, "two-column CSV")->required();
    pgc->add_flag("--raw,!--centered", pg_flags.raw, "skip mean subtraction");
    pgc->add_flag("--overlay-ar2", pg_flags.overlay, "add the fitted AR(2) density column");
    pgc->add_option("--acf", pg_flags.acf, "ACF estimator for the overlay fit")
        ->check(CLI::IsMember({"hat", "tilde"}))
        ->default_val("hat");
    pgc->add_option("--out", pg_flags.out, "output CSV (lambda,I_n[,f_fit])")->required();

    RatesFlags rate_flags;
    auto* rates = app.add_subcommand("rates", "Monte Carlo convergence-rate study");
    rates->add_option("--alpha", rate_flags.alpha, "delta_n = c n^-alpha, alpha in [0,1/3)")
        ->default_val("0.25");
    rates->add_option("--c-delta", rate_flags.c_delta, "constant c in delta_n = c n^-alpha")
        ->default_val("1.0");
    rates->add_option("--lambda0", rate_flags.lambda0, "peak frequency")->default_val("1.0");
    rates->add_option("--driver", rate_flags.driver, "driver spec")->default_val("white:1");
    rates->add_option("--n-grid", rate_flags.n_grid, "comma-separated sample sizes")
        ->default_val("512,1024,2048,4096,8192");
    rates->add_option("--replicas", rate_flags.replicas, "Monte Carlo replicas per n")
        ->default_val("500");
    rates->add_option("--seed", rate_flags.seed, "base seed")->default_val("1");
    rates->add_option("--threads", rate_flags.threads, "worker threads (0 = hardware)")
        ->default_val("0");
    rates->add_option("--out-json", rate_flags.out_json, "also write the JSON document here");
    rates->add_option("--out-csv", rate_flags.out_csv, "write the per-n CSV table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (fit->parsed())
            return cmd_fit(fit_flags);
        if (sim->parsed())
            return cmd_simulate(sim_flags);
        if (pgc->parsed())
            return cmd_periodogram(pg_flags);
        if (rates->parsed())
            return cmd_rates(rate_flags);
    } catch (const arpeak::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const arpeak::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const arpeak::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
