#ifndef QENS_DIFFRACTION_HPP
#define QENS_DIFFRACTION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qens/error.hpp"
#include "qens/grid.hpp"
#include "qens/quadrature.hpp"
#include "qens/random.hpp"

// Scalar Kirchhoff diffraction from slits on a line. Geometry: the aperture
// lies on z = 0, the point source sits on the axis at z = -source_distance
// and the screen is the line z = screen_distance. Coordinates along the
// aperture and the screen are both called x.

namespace qens {

struct Slit {
    double center = 0.0;  // m
    double width = 0.0;   // m
};

struct SlitAperture {
    std::vector<Slit> slits;
    double screen_distance = 1.0;  // m
    double source_distance = 1.0;  // m

    void validate() const {
        detail::require(screen_distance > 0.0 && source_distance > 0.0, "SlitAperture: distances must be positive");
        auto sorted = slits;
        std::sort(sorted.begin(), sorted.end(), [](const Slit& a, const Slit& b) { return a.center < b.center; });
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            detail::require(sorted[i].width > 0.0, "SlitAperture: slit widths must be positive");
            if (i > 0)
                detail::require(sorted[i - 1].center + 0.5 * sorted[i - 1].width <=
                                    sorted[i].center - 0.5 * sorted[i].width,
                                "SlitAperture: slits overlap");
        }
    }

    /// Largest |x| covered by any slit.
    double extent() const {
        double e = 0.0;
        for (const auto& s : slits) e = std::max(e, std::abs(s.center) + 0.5 * s.width);
        return e;
    }

    static SlitAperture single(double width, double screen, double source) {
        return {{{0.0, width}}, screen, source};
    }
    static SlitAperture double_slit(double width, double separation, double screen, double source) {
        return {{{-0.5 * separation, width}, {0.5 * separation, width}}, screen, source};
    }
};

/// Warning text when the screen is not far compared with the aperture.
inline std::optional<std::string> far_field_warning(const SlitAperture& a, double min_ratio = 100.0) {
    const double ext = a.extent();
    if (ext > 0.0 && a.screen_distance < min_ratio * 2.0 * ext)
        return "screen distance is less than " + std::to_string(min_ratio) + "x the aperture extent";
    return std::nullopt;
}

struct KirchhoffOptions {
    std::size_t order = 32;        // starting Gauss-Legendre order per slit
    double tolerance = 1e-8;       // relative change between order doublings
    std::size_t max_order = 8192;
};

/// Gamma(k, x): line integral over the open slits of
///   (i / 2 lambda) (d / rho^2) (1 + i/(k rho)) e^{i k rho} * e^{i k R(x')},
/// with rho the aperture-to-screen distance, d the screen distance and R the
/// source-to-aperture distance.
inline complex kirchhoff_amplitude(const SlitAperture& a, double k, double x_screen,
                                   const KirchhoffOptions& opt = {}) {
    a.validate();
    detail::require(k > 0.0, "kirchhoff_amplitude: wave number must be positive");
    const double lambda = 2.0 * std::numbers::pi / k;
    const double d = a.screen_distance;
    const double rs = a.source_distance;
    const complex pref(0.0, 1.0 / (2.0 * lambda));
    // The constant phase k (d + R_0) is dropped; path excesses are formed
    // without cancellation so the phase stays accurate at large k d.
    auto integrand = [&](double xp) {
        const double dx = x_screen - xp;
        const double rho = std::sqrt(dx * dx + d * d);
        const double r_src = std::sqrt(xp * xp + rs * rs);
        const double excess = dx * dx / (rho + d) + xp * xp / (r_src + rs);
        return pref * (d / (rho * rho)) * complex(1.0, 1.0 / (k * rho)) * std::polar(1.0, k * excess);
    };
    complex total{};
    for (const auto& s : a.slits) {
        const double lo = s.center - 0.5 * s.width, hi = s.center + 0.5 * s.width;
        // Near a diffraction zero the integral cancels; measure the change
        // against the integral of |integrand| as well.
        const double magnitude = s.width * std::abs(integrand(s.center));
        complex prev = integrate_gl(integrand, lo, hi, opt.order);
        std::size_t n = 2 * opt.order;
        for (;; n *= 2) {
            if (n > opt.max_order) throw convergence_error("kirchhoff_amplitude: aperture integral did not converge");
            const complex next = integrate_gl(integrand, lo, hi, n);
            const bool done = std::abs(next - prev) <= opt.tolerance * std::max(std::abs(next), 1e-6 * magnitude) + 1e-300;
            prev = next;
            if (done) break;
        }
        total += prev;
    }
    return total;
}

/// I(x) = |Gamma(k, x)|^2 normalized to unit trapezoidal integral over the grid.
inline std::vector<double> intensity_pattern(const SlitAperture& a, double k, const std::vector<double>& screen,
                                             const KirchhoffOptions& opt = {}) {
    const double h = uniform_spacing(screen);
    std::vector<double> I(screen.size());
    for (std::size_t i = 0; i < screen.size(); ++i) I[i] = std::norm(kirchhoff_amplitude(a, k, screen[i], opt));
    const double total = trapezoid(I, h);
    if (total > 0.0)
        for (auto& v : I) v /= total;
    return I;
}

/// Fraunhofer intensity |sum_s w_s sinc(k w_s sin(theta) / 2) e^{-i k c_s sin(theta)}|^2,
/// sin(theta) = x / sqrt(x^2 + d^2). Unnormalized.
inline double fraunhofer_intensity(const SlitAperture& a, double k, double x_screen) {
    const double st = x_screen / std::hypot(x_screen, a.screen_distance);
    complex amp{};
    for (const auto& s : a.slits) {
        const double arg = 0.5 * k * s.width * st;
        const double sinc = arg == 0.0 ? 1.0 : std::sin(arg) / arg;
        amp += s.width * sinc * std::polar(1.0, -k * s.center * st);
    }
    return std::norm(amp);
}

// ---------------------------------------------------------------------------
// Pattern metrics

/// (I_max - I_min) / (I_max + I_min) over grid points with |x| <= half_width.
inline double fringe_contrast(const std::vector<double>& x, const std::vector<double>& I, double half_width) {
    double mx = -std::numeric_limits<double>::infinity(), mn = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > half_width) continue;
        mx = std::max(mx, I[i]);
        mn = std::min(mn, I[i]);
    }
    detail::require(std::isfinite(mx), "fringe_contrast: no grid points in window");
    return (mx + mn) > 0.0 ? (mx - mn) / (mx + mn) : 0.0;
}

namespace detail {
// Vertex of the parabola through three equally spaced samples.
inline double parabolic_vertex(double x, double h, double ym, double y0, double yp) {
    const double den = ym - 2.0 * y0 + yp;
    return den == 0.0 ? x : x + 0.5 * h * (ym - yp) / den;
}
}  // namespace detail

/// Positions of interior local maxima (or minima) within |x| <= half_width,
/// refined by parabolic interpolation.
inline std::vector<double> local_extrema(const std::vector<double>& x, const std::vector<double>& I,
                                         double half_width, bool maxima = true) {
    const double h = uniform_spacing(x);
    std::vector<double> out;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        if (std::abs(x[i]) > half_width) continue;
        const double s = maxima ? 1.0 : -1.0;
        if (s * I[i] > s * I[i - 1] && s * I[i] >= s * I[i + 1])
            out.push_back(detail::parabolic_vertex(x[i], h, I[i - 1], I[i], I[i + 1]));
    }
    return out;
}

/// Mean spacing of neighbouring maxima within |x| <= half_width.
inline double fringe_period(const std::vector<double>& x, const std::vector<double>& I, double half_width) {
    const auto peaks = local_extrema(x, I, half_width, true);
    detail::require(peaks.size() >= 2, "fringe_period: fewer than two maxima in window");
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

/// First local minimum at x > 0.
inline double first_minimum(const std::vector<double>& x, const std::vector<double>& I) {
    for (double m : local_extrema(x, I, std::numeric_limits<double>::infinity(), false))
        if (m > 0.0) return m;
    throw domain_error("first_minimum: no minimum at positive x");
}

// ---------------------------------------------------------------------------
// Single-particle detection events

struct HitRecord {
    std::vector<double> positions;  // m
    std::uint64_t seed = 0;
};

namespace detail {
// Cell boundaries around each grid node, clipped to the screen.
inline std::pair<double, double> cell(const std::vector<double>& x, std::size_t i, double h) {
    const double lo = i == 0 ? x.front() : x[i] - 0.5 * h;
    const double hi = i + 1 == x.size() ? x.back() : x[i] + 0.5 * h;
    return {lo, hi};
}

inline std::vector<double> cell_probabilities(const std::vector<double>& x, const std::vector<double>& I) {
    require(x.size() == I.size() && x.size() >= 2, "cell_probabilities: size mismatch");
    const double h = uniform_spacing(x);
    std::vector<double> p(x.size());
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(I[i] >= 0.0 && std::isfinite(I[i]), "cell_probabilities: intensity must be finite and >= 0");
        const auto [lo, hi] = cell(x, i, h);
        p[i] = I[i] * (hi - lo);
        total += p[i];
    }
    require(total > 0.0, "cell_probabilities: zero intensity");
    for (auto& v : p) v /= total;
    return p;
}
}  // namespace detail

/// n detection events drawn from I by inverse CDF over the grid cells, each
/// placed uniformly within its cell. Draw i uses counters 2i and 2i+1 only.
inline HitRecord sample_hits(const std::vector<double>& screen, const std::vector<double>& I, std::size_t n,
                             std::uint64_t seed) {
    detail::require(n >= 1, "sample_hits: need at least one sample");
    const auto p = detail::cell_probabilities(screen, I);
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) cdf[i] = (acc += p[i]);
    cdf.back() = 1.0;
    const double h = uniform_spacing(screen);
    const CounterRng rng(seed);
    HitRecord rec;
    rec.seed = seed;
    rec.positions.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform(2 * i);
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        idx = std::min(idx, cdf.size() - 1);
        const auto [lo, hi] = detail::cell(screen, idx, h);
        rec.positions[i] = lo + (hi - lo) * rng.uniform(2 * i + 1);
    }
    return rec;
}

/// Hit counts per grid cell divided by the number of hits.
inline std::vector<double> hit_histogram(const HitRecord& hits, const std::vector<double>& screen) {
    const double h = uniform_spacing(screen);
    std::vector<double> counts(screen.size(), 0.0);
    for (double x : hits.positions) {
        auto i = static_cast<long>(std::floor((x - screen.front()) / h + 0.5));
        i = std::clamp(i, 0L, static_cast<long>(screen.size()) - 1);
        counts[static_cast<std::size_t>(i)] += 1.0;
    }
    for (auto& c : counts) c /= static_cast<double>(hits.positions.size());
    return counts;
}

/// sum_i |hist_i - p_i| with p_i the cell probabilities of I.
inline double histogram_l1(const HitRecord& hits, const std::vector<double>& screen, const std::vector<double>& I) {
    const auto hist = hit_histogram(hits, screen);
    const auto p = detail::cell_probabilities(screen, I);
    double l1 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(hist[i] - p[i]);
    return l1;
}

}  // namespace qens

#endif
