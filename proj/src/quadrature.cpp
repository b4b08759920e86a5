#include "arpeak/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "arpeak/types.hpp"

namespace arpeak {
namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(center);
        } else {
            fsum = f(center - half * kNodes[i]) + f(center + half * kNodes[i]);
        }
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const std::vector<double>& breakpoints,
                                    const QuadratureOptions& opts) {
    std::vector<double> bounds{a, b};
    for (double p : breakpoints)
        if (p > a && p < b)
            bounds.push_back(p);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    std::priority_queue<Panel> panels;
    double total = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Panel p = evaluate_panel(f, bounds[i], bounds[i + 1]);
        total += p.value;
        err += p.error;
        panels.push(p);
    }

    int count = static_cast<int>(panels.size());
    auto target = [&] { return std::max(opts.rel_tol * std::abs(total), opts.abs_tol); };
    while (err > target() && count < opts.max_panels) {
        Panel worst = panels.top();
        panels.pop();
        total -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (Panel half : {evaluate_panel(f, worst.a, mid), evaluate_panel(f, mid, worst.b)}) {
            total += half.value;
            err += half.error;
            panels.push(half);
        }
        ++count;
    }

    if (err > target()) {
        std::ostringstream os;
        os << "quadrature did not converge: error estimate " << err
           << " exceeds target " << target() << " after " << count << " panels";
        throw NumericError(os.str(), err);
    }
    return {total, err, count};
}

} // namespace arpeak
