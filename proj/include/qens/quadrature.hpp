#ifndef QENS_QUADRATURE_HPP
#define QENS_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "qens/error.hpp"

namespace qens {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

namespace detail {

inline GaussRule compute_gauss_legendre(std::size_t order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const std::size_t half = (order + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(order) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t n = 2; n <= order; ++n) {
                const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node for the weight.
        double p0 = 1.0, p1 = x;
        for (std::size_t n = 2; n <= order; ++n) {
            const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace detail

/// Gauss-Legendre rule of the given order on [-1, 1]; cached per order.
inline const GaussRule& gauss_legendre(std::size_t order) {
    detail::require(order >= 1, "gauss_legendre: order must be >= 1");
    static std::mutex mutex;
    static std::map<std::size_t, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, detail::compute_gauss_legendre(order)).first;
    return it->second;
}

template <class F>
auto integrate_gl(F&& f, double a, double b, std::size_t order = 64) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    using R = decltype(f(mid));
    R sum{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

/// Composite Gauss-Legendre over `panels` equal sub-intervals of [a, b].
template <class F>
auto integrate_composite(F&& f, double a, double b, std::size_t panels, std::size_t order = 64) {
    detail::require(panels >= 1, "integrate_composite: need at least one panel");
    const double h = (b - a) / static_cast<double>(panels);
    using R = decltype(f(a));
    R sum{};
    for (std::size_t p = 0; p < panels; ++p)
        sum += integrate_gl(f, a + h * p, (p + 1 == panels) ? b : a + h * (p + 1), order);
    return sum;
}

/// Doubles the Gauss-Legendre order, starting at `order`, until two
/// successive estimates differ by less than `tol` (absolute, scaled by the
/// magnitude of the estimate when it exceeds one).
template <class F>
auto integrate_adaptive_order(F&& f, double a, double b, std::size_t order = 32,
                              double tol = 1e-8, std::size_t max_order = 4096) {
    auto prev = integrate_gl(f, a, b, order);
    for (std::size_t n = 2 * order; n <= max_order; n *= 2) {
        auto next = integrate_gl(f, a, b, n);
        const double scale = std::max(1.0, static_cast<double>(std::abs(next)));
        if (std::abs(next - prev) < tol * scale) return next;
        prev = next;
    }
    throw convergence_error("integrate_adaptive_order: no convergence up to max order");
}

/// Trapezoidal rule on samples with uniform spacing h.
template <class T>
T trapezoid(const std::vector<T>& y, double h) {
    if (y.size() < 2) return T{};
    T sum = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) sum += y[i];
    return sum * h;
}

}  // namespace qens

#endif
