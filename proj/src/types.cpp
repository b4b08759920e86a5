#include "arpeak/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace arpeak {

void DriverSpec::validate() const {
    if (!(std::isfinite(sigma2) && sigma2 > 0.0))
        throw ValidationError("driver: sigma2 must be finite and > 0");
    switch (kind) {
    case Kind::white:
        return;
    case Kind::ar1:
        if (!(std::isfinite(coeff) && std::abs(coeff) < 1.0))
            throw ValidationError("driver: ar1 requires |phi| < 1");
        return;
    case Kind::ma1:
        if (!(std::isfinite(coeff) && std::abs(coeff) < 1.0))
            throw ValidationError("driver: ma1 requires |theta| < 1");
        return;
    }
    throw ValidationError("driver: unknown kind");
}

std::string DriverSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::white: os << "white(" << sigma2 << ")"; break;
    case Kind::ar1: os << "ar1(" << coeff << "," << sigma2 << ")"; break;
    case Kind::ma1: os << "ma1(" << coeff << "," << sigma2 << ")"; break;
    }
    return os.str();
}

void ProcessSpec::validate() const {
    if (!(std::isfinite(delta) && delta > 0.0 && delta < 1.0))
        throw ValidationError("spec: delta must lie strictly in (0, 1)");
    if (!(std::isfinite(lambda0) && lambda0 > 0.0 && lambda0 < std::numbers::pi))
        throw ValidationError("spec: lambda0 must lie strictly in (0, pi)");
    driver.validate();
}

void SimConfig::validate() const {
    if (n < 8)
        throw ValidationError("sim: n must be >= 8");
    if (burn_in && *burn_in < 0)
        throw ValidationError("sim: burn_in must be >= 0");
}

void require_estimable(const TimeSeries& x) {
    if (x.size() < 8)
        throw ValidationError("series too short: n < 8");
    for (double v : x.values)
        if (!std::isfinite(v))
            throw ValidationError("series contains non-finite values");
}

} // namespace arpeak
