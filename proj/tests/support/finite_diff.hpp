#pragma once

// Independent derivative oracle: central finite differences. Deliberately
// shares no code with the dual-number evaluation path it cross-checks.

#include <functional>
#include <vector>

namespace testsupport {

inline std::vector<double> central_difference(
    const std::function<std::vector<double>(const std::vector<double>&)>& f,
    const std::vector<double>& x, const std::vector<double>& dir, double step = 1e-6) {
    std::vector<double> lo = x, hi = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        hi[i] += step * dir[i];
        lo[i] -= step * dir[i];
    }
    auto fhi = f(hi), flo = f(lo);
    std::vector<double> d(fhi.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (fhi[i] - flo[i]) / (2 * step);
    return d;
}

inline bool close_rel(double a, double b, double tol) {
    double scale = 1.0;
    if (std::abs(a) > scale) scale = std::abs(a);
    if (std::abs(b) > scale) scale = std::abs(b);
    return std::abs(a - b) <= tol * scale;
}

} // namespace testsupport
