#ifndef QENS_SQUARE_WELL_HPP
#define QENS_SQUARE_WELL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "qens/constants.hpp"
#include "qens/ensemble.hpp"
#include "qens/error.hpp"
#include "qens/quadrature.hpp"

// Ensemble treatment of the symmetric square well V = 0 for |x| <= x0,
// V = V0 outside. Members are even (cosine) waves with interior wave
// number k1 and exterior decay constant k2, k1^2 + k2^2 = m V0 / hbar^2.

namespace qens {

struct WellGeometry {
    double x0 = 1.0;  // half-width (m)
    double V0 = 1.0;  // barrier height (J)
    double m = 1.0;   // mass (kg)
    double hbar = si::hbar;

    void validate() const {
        detail::require(x0 > 0.0 && V0 > 0.0 && m > 0.0 && hbar > 0.0,
                        "WellGeometry: x0, V0, m and hbar must be positive");
    }
    /// m V0 / hbar^2
    double k_squared_total() const { return m * V0 / (hbar * hbar); }
};

struct WellMember {
    double k1 = 0.0;
    double k2 = 0.0;
    double phi0 = 0.0;
    bool anomalous = false;  // cos(k1 x0) <= 0: amplitude sign/zero anomaly
};

struct MemberAmplitude {
    double value = 0.0;
    bool anomalous = false;
};

inline double partner_k(double k, const WellGeometry& g) {
    g.validate();
    const double total = g.k_squared_total();
    const double k2sq = k * k;
    detail::require(k >= 0.0 && k2sq <= total * (1.0 + 1e-14), "partner_k: wave number outside [0, sqrt(m V0)/hbar]");
    return std::sqrt(std::max(0.0, total - k2sq));
}

/// sqrt(m k2 / (1 + k2 x0)) e^{k2 x0} cos(k1 x0). Flags cos(k1 x0) <= 0.
inline MemberAmplitude member_amplitude(double k1, double k2, const WellGeometry& g) {
    g.validate();
    const double c = std::cos(k1 * g.x0);
    MemberAmplitude a;
    a.value = std::sqrt(g.m * k2 / (1.0 + k2 * g.x0)) * std::exp(k2 * g.x0) * c;
    a.anomalous = c <= 0.0;
    return a;
}

inline WellMember make_member(double k1, const WellGeometry& g) {
    WellMember mem;
    mem.k1 = k1;
    mem.k2 = partner_k(k1, g);
    const auto a = member_amplitude(mem.k1, mem.k2, g);
    mem.phi0 = a.value;
    mem.anomalous = a.anomalous;
    return mem;
}

namespace detail {
// Distance of k1 x0 from the nearest zero of cosine.
inline double cos_zero_distance(double k1x0) {
    const double half_pi = 0.5 * std::numbers::pi;
    const double n = std::round((k1x0 - half_pi) / std::numbers::pi);
    return std::abs(k1x0 - (half_pi + n * std::numbers::pi));
}
}  // namespace detail

/// Piecewise member wave: phi0 e^{k2 x} left, phi0 e^{-k2 x0} cos(k1 x)/cos(k1 x0)
/// inside, phi0 e^{-k2 x} right.
inline double member_wavefunction(const WellMember& mem, const WellGeometry& g, double x) {
    g.validate();
    if (detail::cos_zero_distance(mem.k1 * g.x0) < 1e-8)
        throw singular_member("member_wavefunction: cos(k1 x0) = 0");
    if (x <= -g.x0) return mem.phi0 * std::exp(mem.k2 * x);
    if (x >= g.x0) return mem.phi0 * std::exp(-mem.k2 * x);
    return mem.phi0 * std::exp(-mem.k2 * g.x0) * std::cos(mem.k1 * x) / std::cos(mem.k1 * g.x0);
}

/// int |phi / phi0|^2 dx over the real line, in closed form.
inline double member_shape_norm(double k1, double k2, const WellGeometry& g) {
    const double c = std::cos(k1 * g.x0);
    const double inside = k1 > 0.0 ? g.x0 + std::sin(2.0 * k1 * g.x0) / (2.0 * k1) : 2.0 * g.x0;
    return std::exp(-2.0 * k2 * g.x0) * (1.0 / k2 + inside / (c * c));
}

/// Amplitude that makes int |phi|^2 dx = m exactly for the member (k1, partner).
inline double normalized_amplitude(double k1, const WellGeometry& g) {
    const double k2 = partner_k(k1, g);
    detail::require(k2 > 0.0, "normalized_amplitude: unbound member (k2 = 0)");
    return std::sqrt(g.m / member_shape_norm(k1, k2, g));
}

/// Relative deviation |phi0_formula| / phi0_normalized - 1. Zero on the
/// matched members tan(k1 x0) = k2 / k1, nonzero in general.
inline double amplitude_deviation(double k1, const WellGeometry& g) {
    const double k2 = partner_k(k1, g);
    return std::abs(member_amplitude(k1, k2, g).value) / normalized_amplitude(k1, g) - 1.0;
}

/// Interior wave numbers satisfying tan(k1 x0) = k2 / k1 (the even bound
/// states), ascending.
inline std::vector<double> matched_members(const WellGeometry& g) {
    g.validate();
    const double kmax = std::sqrt(g.k_squared_total());
    auto f = [&](double k1) {
        const double k2 = std::sqrt(std::max(0.0, g.k_squared_total() - k1 * k1));
        return k1 * std::sin(k1 * g.x0) - k2 * std::cos(k1 * g.x0);
    };
    std::vector<double> roots;
    for (int n = 0;; ++n) {
        const double lo = n * std::numbers::pi / g.x0;
        if (lo >= kmax) break;
        const double hi = std::min(kmax, (n + 0.5) * std::numbers::pi / g.x0);
        const double flo = f(lo), fhi = f(hi);
        if (flo == 0.0) { roots.push_back(lo); continue; }
        if (flo * fhi > 0.0) continue;
        boost::uintmax_t iters = 200;
        auto tol = boost::math::tools::eps_tolerance<double>(52);
        auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
        roots.push_back(0.5 * (a + b));
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Ensemble density

struct WellDensityOptions {
    // false: interior integral over k1 in [0, sqrt(m E_T)/hbar] and exterior
    // integral over k2 in [0, sqrt(m (V0 - E_T))/hbar], independently.
    // true: one k1 range for both regions, k2 = partner_k(k1).
    bool paired = false;
    std::size_t order = 64;
    std::size_t panels = 8;
};

namespace detail {

// [lo, hi] minus symmetric windows of width `width` around each point in `cuts`.
inline std::vector<std::pair<double, double>> punch_holes(double lo, double hi, std::vector<double> cuts,
                                                          double width) {
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> out;
    double start = lo;
    for (double c : cuts) {
        const double a = c - 0.5 * width, b = c + 0.5 * width;
        if (b <= lo || a >= hi) continue;
        if (a > start) out.emplace_back(start, a);
        start = std::max(start, b);
    }
    if (start < hi) out.emplace_back(start, hi);
    return out;
}

// Interior wave numbers in [lo, hi] where cos(k1 x0) = 0.
inline std::vector<double> cos_zeros(double lo, double hi, double x0) {
    std::vector<double> z;
    for (int n = 0;; ++n) {
        const double k = (0.5 + n) * std::numbers::pi / x0;
        if (k > hi) break;
        if (k >= lo) z.push_back(k);
    }
    return z;
}

template <class F>
double integrate_pieces(F&& f, const std::vector<std::pair<double, double>>& pieces, const WellDensityOptions& o) {
    double s = 0.0;
    for (auto [a, b] : pieces) s += integrate_composite(f, a, b, o.panels, o.order);
    return s;
}

}  // namespace detail

/// Even-parity ensemble density of the well for 0 < E_T < V0, renormalized
/// to unit integral over the real line. Members with cos(k1 x0) within a
/// window of 1e-6 times the k-range of a zero are left out.
inline EnsembleDensity well_ensemble_density(const WellGeometry& g, double total_energy,
                                             const std::vector<double>& grid,
                                             const WellDensityOptions& opt = {}) {
    g.validate();
    if (!(total_energy > 0.0 && total_energy < g.V0))
        throw unsupported_regime("well_ensemble_density: need 0 < E_T < V0 (bound regime)");

    const double ktot2 = g.k_squared_total();
    const double kin_max = std::sqrt(g.m * total_energy) / g.hbar;
    const double kout_max = opt.paired ? kin_max : std::sqrt(g.m * (g.V0 - total_energy)) / g.hbar;

    // Interior integration range (over k1).
    const auto k1_zeros = detail::cos_zeros(0.0, kin_max, g.x0);
    const auto in_pieces = detail::punch_holes(0.0, kin_max, k1_zeros, 1e-6 * kin_max);

    // Exterior integration range: over k1 when paired, over k2 otherwise.
    std::vector<double> out_cuts;
    if (opt.paired) {
        out_cuts = k1_zeros;
    } else {
        const double k1_lo = std::sqrt(std::max(0.0, ktot2 - kout_max * kout_max));
        for (double z : detail::cos_zeros(k1_lo, std::sqrt(ktot2), g.x0))
            out_cuts.push_back(std::sqrt(std::max(0.0, ktot2 - z * z)));
    }
    const auto out_pieces = detail::punch_holes(0.0, kout_max, out_cuts, 1e-6 * kout_max);

    auto member_from = [&](double k, bool exterior) {
        if (exterior && !opt.paired) {
            WellMember mem;
            mem.k2 = k;
            mem.k1 = std::sqrt(std::max(0.0, ktot2 - k * k));
            mem.phi0 = member_amplitude(mem.k1, mem.k2, g).value;
            return mem;
        }
        return make_member(k, g);
    };

    auto density_at = [&](double x) {
        const double ax = std::abs(x);
        if (ax <= g.x0) {
            return detail::integrate_pieces(
                [&](double k1) {
                    const double v = member_wavefunction(member_from(k1, false), g, ax);
                    return v * v;
                },
                in_pieces, opt);
        }
        return detail::integrate_pieces(
            [&](double k) {
                const double v = member_wavefunction(member_from(k, true), g, ax);
                return v * v;
            },
            out_pieces, opt);
    };

    // Normalizer: x-integrals done in closed form per member.
    //   interior: phi0^2 e^{-2 k2 x0} / cos^2(k1 x0) * (x0/2 + sin(2 k1 x0)/(4 k1)) = m k2/(1+k2 x0) * (...)
    //   exterior: phi0^2 e^{-2 k2 x0} / (2 k2) = m cos^2(k1 x0) / (2 (1 + k2 x0))
    const double half_in = detail::integrate_pieces(
        [&](double k1) {
            const double k2 = partner_k(k1, g);
            const double shape = k1 > 0.0 ? 0.5 * g.x0 + std::sin(2.0 * k1 * g.x0) / (4.0 * k1) : g.x0;
            return g.m * k2 / (1.0 + k2 * g.x0) * shape;
        },
        in_pieces, opt);
    const double half_out = detail::integrate_pieces(
        [&](double k) {
            const WellMember mem = member_from(k, true);
            const double c = std::cos(mem.k1 * g.x0);
            return g.m * c * c / (2.0 * (1.0 + mem.k2 * g.x0));
        },
        out_pieces, opt);
    const double total = 2.0 * (half_in + half_out);

    EnsembleDensity d;
    d.rho_bar = 1.0 / total;
    d.x = grid;
    d.w.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) d.w[i] = density_at(grid[i]) * d.rho_bar;
    return d;
}

/// Members spaced uniformly over k1 in [0, sqrt(m E_T)/hbar], singular ones skipped.
inline std::vector<WellMember> sample_members(const WellGeometry& g, double total_energy, std::size_t count) {
    g.validate();
    detail::require(count >= 2, "sample_members: need at least two members");
    detail::require(total_energy > 0.0 && total_energy <= g.V0, "sample_members: need 0 < E_T <= V0");
    const double kmax = std::sqrt(g.m * total_energy) / g.hbar;
    std::vector<WellMember> out;
    for (std::size_t i = 0; i < count; ++i) {
        const double k1 = kmax * static_cast<double>(i) / static_cast<double>(count - 1);
        if (detail::cos_zero_distance(k1 * g.x0) < 1e-8) continue;
        out.push_back(make_member(k1, g));
    }
    return out;
}

}  // namespace qens

#endif
