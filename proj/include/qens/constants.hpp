#ifndef QENS_CONSTANTS_HPP
#define QENS_CONSTANTS_HPP

#include <cmath>
#include <numbers>

#include "qens/error.hpp"

// SI units throughout. Energies follow the total-energy convention
// E_T = m u^2, so the ensemble cutoff is k_max = sqrt(m E_T)/hbar = m u/hbar.

namespace qens {

namespace si {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double hydrogen_radius = 3.3e-10;     // m, atomic radius used for V_el
}  // namespace si

struct PhysicalConstants {
    double hbar = si::hbar;
    double m_electron = si::electron_mass;
    double r_hydrogen = 0.0;
    double v_electron = 0.0;  // m^3
    double beta_el = 0.0;     // kg / (m s)
};

/// Registry with the free-electron volume V_el = 2 pi r^3 and the local
/// constant beta_el = hbar / V_el.
inline PhysicalConstants derived_constants(double r_hydrogen = si::hydrogen_radius) {
    detail::require(r_hydrogen > 0.0 && std::isfinite(r_hydrogen),
                    "derived_constants: radius must be positive");
    PhysicalConstants c;
    c.r_hydrogen = r_hydrogen;
    c.v_electron = 2.0 * std::numbers::pi * r_hydrogen * r_hydrogen * r_hydrogen;
    c.beta_el = c.hbar / c.v_electron;
    return c;
}

/// alpha in  int |psi|^2 d^3r = alpha u^3,  alpha = 4 pi m^4 / (3 hbar^3).
inline double norm_integral_coefficient(double mass, double hbar = si::hbar) {
    detail::require(mass > 0.0, "norm_integral_coefficient: mass must be positive");
    detail::require(hbar > 0.0, "norm_integral_coefficient: hbar must be positive");
    const double m2 = mass * mass;
    return 4.0 * std::numbers::pi * m2 * m2 / (3.0 * hbar * hbar * hbar);
}

}  // namespace qens

#endif
