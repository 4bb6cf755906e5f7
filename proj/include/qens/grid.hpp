#ifndef QENS_GRID_HPP
#define QENS_GRID_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qens/error.hpp"

namespace qens {

using complex = std::complex<double>;

/// n points from lo to hi inclusive.
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    detail::require(n >= 2, "linspace: need at least two points");
    detail::require(hi > lo, "linspace: empty interval");
    std::vector<double> x(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = lo + h * static_cast<double>(i);
    x.back() = hi;
    return x;
}

/// n points lo, lo + L/n, ..., excluding hi (periodic sampling).
inline std::vector<double> periodic_grid(double lo, double length, std::size_t n) {
    detail::require(n >= 2 && length > 0.0, "periodic_grid: invalid size");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = lo + length * static_cast<double>(i) / n;
    return x;
}

inline double uniform_spacing(const std::vector<double>& x, double rel_tol = 1e-9) {
    detail::require(x.size() >= 2, "grid needs at least two points");
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    detail::require(h > 0.0, "grid must be strictly increasing");
    for (std::size_t i = 1; i < x.size(); ++i)
        detail::require(std::abs((x[i] - x[i - 1]) - h) <= rel_tol * h + 1e-300,
                        "grid must be uniformly spaced");
    return h;
}

/// Complex field sampled on a uniform 1D grid.
struct ComplexGrid1D {
    std::vector<double> x;
    std::vector<complex> values;

    std::size_t size() const { return x.size(); }
    double spacing() const { return uniform_spacing(x); }

    std::vector<double> density() const {
        std::vector<double> d(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) d[i] = std::norm(values[i]);
        return d;
    }
};

/// Second-order central first derivative; one-sided second-order stencils at the ends.
inline std::vector<double> gradient(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    detail::require(n >= 3, "gradient: need at least three samples");
    std::vector<double> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    return d;
}

inline std::vector<complex> gradient(const std::vector<complex>& f, double h) {
    const std::size_t n = f.size();
    detail::require(n >= 3, "gradient: need at least three samples");
    std::vector<complex> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    return d;
}

}  // namespace qens

#endif
