#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arpeak {

// Error categories map onto the CLI exit codes: validation -> 2,
// parse -> 3, numeric -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what, double achieved = 0.0)
        : Error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

// Raised when an estimator is undefined for the data at hand (no interior
// spectral peak, degenerate autocorrelations, ...). Reported, not fatal.
class EstimationError : public NumericError {
public:
    using NumericError::NumericError;
};

// Spectral/innovation description of the driver process {U_t}. The menu is
// the smallest set with non-trivial shapes, a continuous density that is
// strictly positive on [0, pi], and closed-form autocovariances.
struct DriverSpec {
    enum class Kind { white, ar1, ma1 };

    Kind kind = Kind::white;
    double coeff = 0.0;   // phi for ar1, theta for ma1, ignored for white
    double sigma2 = 1.0;  // innovation variance

    static DriverSpec white(double sigma2) { return {Kind::white, 0.0, sigma2}; }
    static DriverSpec ar1(double phi, double sigma2) { return {Kind::ar1, phi, sigma2}; }
    static DriverSpec ma1(double theta, double sigma2) { return {Kind::ma1, theta, sigma2}; }

    void validate() const;
    std::string describe() const;
};

// One member of the near-pole family: damping delta in (0,1), peak
// location lambda0 in (0,pi) (radians per step), and the driver.
struct ProcessSpec {
    double delta = 0.1;
    double lambda0 = 1.0;
    DriverSpec driver;

    void validate() const;
};

struct TimeSeries {
    std::vector<double> values;
    std::string origin;                // optional provenance label
    std::optional<std::uint64_t> seed; // recorded when simulated

    int size() const { return static_cast<int>(values.size()); }
};

struct SimConfig {
    int n = 0;
    std::uint64_t seed = 0;
    std::optional<int> burn_in; // nullopt = auto from the filter decay rate

    void validate() const;
};

// Requires n >= 8 and finite values; throws ValidationError otherwise.
void require_estimable(const TimeSeries& x);

} // namespace arpeak
