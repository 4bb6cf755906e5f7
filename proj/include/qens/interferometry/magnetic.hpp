#ifndef QENS_INTERFEROMETRY_MAGNETIC_HPP
#define QENS_INTERFEROMETRY_MAGNETIC_HPP

#include <cmath>
#include <numbers>

#include "qens/error.hpp"

// Intrinsic plane-wave fields of a particle, propagating along x with
// E along y and B along z, in a static external field
// B_ext = B_ext (0, -sin theta, cos theta) switched on linearly over [0, tau].

namespace qens {

struct EmFieldState {
    double E0 = 1.0;      // V/m
    double B0 = 1.0;      // T
    double k0 = 1.0;      // 1/m
    double omega0 = 1.0;  // rad/s
    double u0 = 1.0;      // m/s

    void validate(double tol = 1e-12) const {
        detail::require(u0 > 0.0, "EmFieldState: propagation speed must be positive");
        detail::require(std::abs(E0 - u0 * B0) <= tol * std::max(1.0, std::abs(E0)), "EmFieldState: need E0 = u0 B0");
        detail::require(std::abs(k0 * u0 - omega0) <= tol * std::max(1.0, std::abs(omega0)),
                        "EmFieldState: need k0 u0 = omega0");
    }
    double phase(double x, double t) const { return k0 * x - omega0 * t; }
};

/// Field state with E0 = u0 B0 and omega0 = k0 u0.
inline EmFieldState make_em_field(double B0, double k0, double u0) {
    detail::require(u0 > 0.0, "make_em_field: propagation speed must be positive");
    return {u0 * B0, B0, k0, k0 * u0, u0};
}

struct PrimedFields {
    double Ey = 0.0, Ez = 0.0, By = 0.0, Bz = 0.0;
};

/// Internal fields at the end of the ramp, with the ramp rate x / tau as given.
inline PrimedFields apply_uniform_field(const EmFieldState& f, double B_ext, double theta, double x, double t,
                                        double tau) {
    detail::require(tau > 0.0, "apply_uniform_field: tau must be positive");
    const double c = std::cos(f.phase(x, t));
    const double rate = x / tau;
    PrimedFields p;
    p.Ey = f.E0 * c - B_ext * std::cos(theta) * rate;
    p.Ez = -B_ext * std::sin(theta) * rate;
    p.By = -B_ext * std::sin(theta);
    p.Bz = f.B0 * c + B_ext * std::cos(theta);
    return p;
}

/// Same with the ramp tied to the propagation, x / tau = u0.
inline PrimedFields apply_uniform_field(const EmFieldState& f, double B_ext, double theta, double x, double t) {
    f.validate();
    const double c = std::cos(f.phase(x, t));
    PrimedFields p;
    p.Ey = f.E0 * c - B_ext * std::cos(theta) * f.u0;
    p.Ez = -B_ext * std::sin(theta) * f.u0;
    p.By = -B_ext * std::sin(theta);
    p.Bz = f.B0 * c + B_ext * std::cos(theta);
    return p;
}

/// phi_em = (|E|^2 / u0^2 + |B|^2) / 2.
inline double em_potential(const PrimedFields& p, double u0) {
    detail::require(u0 > 0.0, "em_potential: u0 must be positive");
    return 0.5 * ((p.Ey * p.Ey + p.Ez * p.Ez) / (u0 * u0) + p.By * p.By + p.Bz * p.Bz);
}

/// B0^2 cos^2(k0 x - omega0 t) + B_ext^2.
inline double em_potential_closed_form(const EmFieldState& f, double B_ext, double x, double t) {
    const double c = std::cos(f.phase(x, t));
    return f.B0 * f.B0 * c * c + B_ext * B_ext;
}

// Sign of the kinetic-potential shift phi_k' = phi_k -/+ B_ext^2. `decrease`
// is the branch that yields a real velocity change; `increase` flips the
// sign of the accumulated phase.
enum class PotentialShift { decrease, increase };

struct MagneticPhase {
    double alpha = 0.0;    // principal value in [0, 2 pi)
    long winding = 0;      // whole turns removed
    double turns = 0.0;    // unwrapped phase / 2 pi = (l / lambda) B_ext / sqrt(rho u0^2)
};

/// alpha = 2 pi ((l / lambda) B_ext / sqrt(rho_bar u0^2) - n). The velocity
/// change du = B_ext / sqrt(rho_bar) is taken as the positive root.
inline MagneticPhase magnetic_phase_shift(double l, double lambda, double B_ext, double rho_bar, double u0,
                                          PotentialShift sign = PotentialShift::decrease) {
    detail::require(l > 0.0 && lambda > 0.0 && rho_bar > 0.0 && u0 > 0.0,
                    "magnetic_phase_shift: l, lambda, rho_bar, u0 must be positive");
    detail::require(B_ext >= 0.0, "magnetic_phase_shift: B_ext must be non-negative");
    const double kinetic = rho_bar * u0 * u0;
    if (B_ext * B_ext > kinetic)
        throw unsupported_regime("magnetic_phase_shift: B_ext^2 exceeds rho_bar u0^2 (beam-stopping regime)");
    MagneticPhase r;
    r.turns = (l / lambda) * B_ext / std::sqrt(kinetic);
    if (sign == PotentialShift::increase) r.turns = -r.turns;
    const double n = std::floor(r.turns);
    r.winding = static_cast<long>(n);
    r.alpha = 2.0 * std::numbers::pi * (r.turns - n);
    return r;
}

}  // namespace qens

#endif
