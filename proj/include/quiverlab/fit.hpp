#pragma once

// Ordinary least-squares line fits used by the growth estimators.

#include <cmath>
#include <cstddef>
#include <vector>

namespace quiverlab::detail {

struct LineFit {
    double slope;
    double residual;  // root mean square
};

inline LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxx > 0 ? sxy / sxx : 0.0;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (my + slope * (x[i] - mx));
        ss += r * r;
    }
    return {slope, std::sqrt(ss / n)};
}

} // namespace quiverlab::detail
