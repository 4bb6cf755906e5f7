#ifndef QENS_ENSEMBLE_HPP
#define QENS_ENSEMBLE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qens/constants.hpp"
#include "qens/error.hpp"
#include "qens/quadrature.hpp"

namespace qens {

enum class Branch { oscillatory, evanescent };

inline const char* to_string(Branch b) {
    return b == Branch::oscillatory ? "oscillatory" : "evanescent";
}

// Radial ensemble: every wave number in [k_min, k_max] with equal weight.
// The amplitude is the per-mode weight phi_0 = sqrt(m), used as a
// dimensionless number with the mass absorbed into prefactors.
struct QuantumEnsemble {
    double k_min = 0.0;
    double k_max = 0.0;
    double amplitude = 1.0;
    Branch branch = Branch::oscillatory;

    void validate() const {
        detail::require(k_min >= 0.0 && k_min <= k_max, "QuantumEnsemble: need 0 <= k_min <= k_max");
        detail::require(amplitude > 0.0, "QuantumEnsemble: amplitude must be positive");
    }
};

struct KLimit {
    double k = 0.0;
    Branch branch = Branch::oscillatory;
};

/// Cutoff wave number in a potential V: sqrt(m |E_T - V|)/hbar, oscillatory
/// when E_T >= V and evanescent otherwise.
inline KLimit k_limit(double total_energy, double potential, double mass, double hbar = si::hbar) {
    detail::require(mass > 0.0, "k_limit: mass must be positive");
    detail::require(total_energy >= 0.0, "k_limit: total energy must be non-negative");
    const double diff = total_energy - potential;
    if (diff >= 0.0) return {std::sqrt(mass * diff) / hbar, Branch::oscillatory};
    return {std::sqrt(-mass * diff) / hbar, Branch::evanescent};
}

inline QuantumEnsemble free_ensemble(double total_energy, double mass, double hbar = si::hbar) {
    detail::require(total_energy >= 0.0, "free_ensemble: total energy must be non-negative");
    detail::require(mass > 0.0, "free_ensemble: mass must be positive");
    QuantumEnsemble e;
    e.k_min = 0.0;
    e.k_max = std::sqrt(mass * total_energy) / hbar;
    e.amplitude = std::sqrt(mass);
    e.branch = Branch::oscillatory;
    return e;
}

/// (4 pi / 3)(k_max^3 - k_min^3) amplitude^2: the double-delta k-space
/// integral reduced to the radial shell.
inline double ensemble_k_volume(const QuantumEnsemble& e) {
    e.validate();
    const double a3 = e.k_max * e.k_max * e.k_max;
    const double b3 = e.k_min * e.k_min * e.k_min;
    return 4.0 * std::numbers::pi / 3.0 * (a3 - b3) * e.amplitude * e.amplitude;
}

// ---------------------------------------------------------------------------
// Potentials and densities

struct PotentialSegment {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double v_lo = 0.0;  // value at x_lo (J)
    double v_hi = 0.0;  // value at x_hi; equal to v_lo for a flat segment

    double value(double x) const {
        if (v_lo == v_hi) return v_lo;
        const double s = (x - x_lo) / (x_hi - x_lo);
        return v_lo + s * (v_hi - v_lo);
    }
    double max_value() const { return std::max(v_lo, v_hi); }
};

/// Piecewise-linear (usually piecewise-constant) potential tiling [x_lo, x_hi].
class PotentialField1D {
public:
    PotentialField1D() = default;

    explicit PotentialField1D(std::vector<PotentialSegment> segments) : segments_(std::move(segments)) {
        detail::require(!segments_.empty(), "PotentialField1D: no segments");
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const auto& s = segments_[i];
            detail::require(std::isfinite(s.x_lo) && std::isfinite(s.x_hi) && std::isfinite(s.v_lo) &&
                                std::isfinite(s.v_hi),
                            "PotentialField1D: non-finite segment");
            detail::require(s.x_hi > s.x_lo, "PotentialField1D: zero-length or reversed segment");
            if (i > 0)
                detail::require(s.x_lo == segments_[i - 1].x_hi,
                                "PotentialField1D: segments must tile the domain without gaps or overlaps");
        }
    }

    /// Flat segments from breakpoints x_0 < x_1 < ... < x_n and n values.
    static PotentialField1D piecewise_constant(const std::vector<double>& breaks,
                                               const std::vector<double>& values) {
        detail::require(breaks.size() == values.size() + 1, "piecewise_constant: need n+1 breakpoints");
        std::vector<PotentialSegment> segs;
        for (std::size_t i = 0; i < values.size(); ++i)
            segs.push_back({breaks[i], breaks[i + 1], values[i], values[i]});
        return PotentialField1D(std::move(segs));
    }

    static PotentialField1D uniform(double x_lo, double x_hi, double value) {
        return piecewise_constant({x_lo, x_hi}, {value});
    }

    const std::vector<PotentialSegment>& segments() const { return segments_; }
    double x_lo() const { return segments_.front().x_lo; }
    double x_hi() const { return segments_.back().x_hi; }

    bool contains(double x) const { return x >= x_lo() && x <= x_hi(); }

    /// At an interior breakpoint the segment on the right wins.
    double operator()(double x) const {
        detail::require(contains(x), "PotentialField1D: point outside domain");
        for (const auto& s : segments_)
            if (x < s.x_hi) return s.value(x);
        return segments_.back().value(x);
    }

    double max_value() const {
        double m = segments_.front().max_value();
        for (const auto& s : segments_) m = std::max(m, s.max_value());
        return m;
    }

private:
    std::vector<PotentialSegment> segments_;
};

struct EnsembleDensity {
    std::vector<double> x;   // m
    std::vector<double> w;   // 1/m
    double rho_bar = 0.0;    // 1 / int (E_T - V)^{3/2} dx
};

/// Probability density w(x) = (E_T - V(x))^{3/2} / int (E_T - V)^{3/2} dx.
/// The normalizer uses composite Gauss-Legendre per potential segment.
inline EnsembleDensity ensemble_density(const PotentialField1D& potential, double total_energy,
                                        const std::vector<double>& grid, std::size_t order = 64) {
    detail::require(!potential.segments().empty(), "ensemble_density: empty potential");
    if (!(total_energy > potential.max_value()))
        throw unsupported_regime(
            "ensemble_density: E_T must exceed the potential everywhere (no positive density where E_T <= V)");
    for (double x : grid) detail::require(potential.contains(x), "ensemble_density: grid point outside domain");

    auto weight = [&](const PotentialSegment& s) {
        return [&s, total_energy](double x) { return std::pow(total_energy - s.value(x), 1.5); };
    };
    double norm = 0.0;
    for (const auto& s : potential.segments()) norm += integrate_gl(weight(s), s.x_lo, s.x_hi, order);

    EnsembleDensity d;
    d.rho_bar = 1.0 / norm;
    d.x = grid;
    d.w.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        d.w[i] = std::pow(total_energy - potential(grid[i]), 1.5) * d.rho_bar;
    return d;
}

// ---------------------------------------------------------------------------
// Measurement filters (retarding-field analyzer)

struct CollapseResult {
    QuantumEnsemble before;
    QuantumEnsemble after;
    double retained_fraction = 1.0;  // (k0^3 - k1^3) / k0^3
};

namespace detail {
// Kinetic convention: k^2 = 2 m E_k / hbar^2.
inline double kinetic_k(double kinetic_energy, double mass, double hbar) {
    return std::sqrt(2.0 * mass * std::max(kinetic_energy, 0.0)) / hbar;
}
}  // namespace detail

/// Restricts an ensemble to the members that pass a retarding potential
/// E_rfa, with the top kinetic energy read off k_max. Thresholds above the
/// top energy leave the local ensemble k_min = k_max.
inline CollapseResult apply_filter(const QuantumEnsemble& e, double retarding_energy, double mass,
                                   double hbar = si::hbar) {
    e.validate();
    detail::require(mass > 0.0, "apply_filter: mass must be positive");
    detail::require(retarding_energy >= 0.0, "apply_filter: retarding energy must be non-negative");
    if (retarding_energy == 0.0) return {e, e, 1.0};
    const double e_kin = hbar * hbar * e.k_max * e.k_max / (2.0 * mass);
    const double k1 = retarding_energy >= e_kin ? e.k_max
                                                : detail::kinetic_k(e_kin - retarding_energy, mass, hbar);
    CollapseResult r;
    r.before = e;
    r.after = e;
    r.after.k_min = std::min(e.k_max, std::max(e.k_min, k1));
    const double full = std::pow(e.k_max, 3) - std::pow(e.k_min, 3);
    const double kept = std::pow(e.k_max, 3) - std::pow(r.after.k_min, 3);
    r.retained_fraction = full > 0.0 ? kept / full : 0.0;
    return r;
}

/// Ensemble before ([0, k0]) and after ([k1, k0]) a retarding-field
/// analyzer, k0^2 = 2 m E_k / hbar^2, k1^2 = 2 m (E_k - E_rfa) / hbar^2.
inline CollapseResult collapse_filter(double kinetic_energy, double retarding_energy, double mass,
                                      double hbar = si::hbar) {
    detail::require(kinetic_energy >= 0.0, "collapse_filter: kinetic energy must be non-negative");
    detail::require(retarding_energy >= 0.0, "collapse_filter: retarding energy must be non-negative");
    detail::require(mass > 0.0, "collapse_filter: mass must be positive");
    QuantumEnsemble before;
    before.k_min = 0.0;
    before.k_max = detail::kinetic_k(kinetic_energy, mass, hbar);
    before.amplitude = std::sqrt(mass);
    if (retarding_energy == 0.0) return {before, before, 1.0};
    if (retarding_energy >= kinetic_energy) {
        CollapseResult r;
        r.before = before;
        r.after = before;
        r.after.k_min = before.k_max;
        r.retained_fraction = 0.0;
        return r;
    }
    CollapseResult r;
    r.before = before;
    r.after = before;
    const double k0 = before.k_max;
    const double k1 = detail::kinetic_k(kinetic_energy - retarding_energy, mass, hbar);
    r.after.k_min = k1;
    // 1 - (k1/k0)^3 written in energies to avoid cancellation in k0^3 - k1^3.
    const double ratio = (kinetic_energy - retarding_energy) / kinetic_energy;
    r.retained_fraction = k0 > 0.0 ? 1.0 - ratio * std::sqrt(ratio) : 0.0;
    return r;
}

}  // namespace qens

#endif
