#ifndef QENS_WAVEPACKET_HPP
#define QENS_WAVEPACKET_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "qens/constants.hpp"
#include "qens/error.hpp"
#include "qens/grid.hpp"
#include "qens/quadrature.hpp"

namespace qens {

using Dispersion = std::function<double(double)>;

/// omega = hbar k^2 / (2 m), the free Schroedinger dispersion.
inline Dispersion free_dispersion(double mass, double hbar = si::hbar) {
    detail::require(mass > 0.0 && hbar > 0.0, "free_dispersion: mass and hbar must be positive");
    return [mass, hbar](double k) { return hbar * k * k / (2.0 * mass); };
}

/// omega = hbar k^2 / m, matching the E_T = m u^2 convention.
inline Dispersion total_energy_dispersion(double mass, double hbar = si::hbar) {
    detail::require(mass > 0.0 && hbar > 0.0, "total_energy_dispersion: mass and hbar must be positive");
    return [mass, hbar](double k) { return hbar * k * k / mass; };
}

struct SpectralPacket {
    std::vector<double> k_grid;     // strictly increasing, uniform
    std::vector<complex> psi_hat;
    Dispersion dispersion;

    void validate() const {
        detail::require(k_grid.size() == psi_hat.size(), "SpectralPacket: size mismatch");
        uniform_spacing(k_grid);
        for (const auto& v : psi_hat)
            detail::require(std::isfinite(v.real()) && std::isfinite(v.imag()), "SpectralPacket: non-finite amplitude");
        detail::require(static_cast<bool>(dispersion), "SpectralPacket: no dispersion");
    }
};

struct GaussianPacketParams {
    double b = 1.0;   // width (m)
    double k0 = 0.0;  // carrier (1/m)
    double m = 1.0;   // mass (kg)

    void validate() const {
        detail::require(b > 0.0, "GaussianPacketParams: width must be positive");
        detail::require(m > 0.0, "GaussianPacketParams: mass must be positive");
    }
};

/// psi_hat(k) = exp(-(k - k0)^2 b^2 / 2) on k_grid. The grid must cover
/// [k0 - 6/b, k0 + 6/b], beyond which the spectrum is below e^-18.
inline SpectralPacket gaussian_spectrum(const GaussianPacketParams& p, const std::vector<double>& k_grid,
                                        double hbar = si::hbar) {
    p.validate();
    detail::require(!k_grid.empty(), "gaussian_spectrum: empty k grid");
    const double reach = 6.0 / p.b;
    if (k_grid.front() > p.k0 - reach || k_grid.back() < p.k0 + reach)
        throw resolution_error("gaussian_spectrum: k grid truncates the spectrum (needs k0 +/- 6/b)");
    SpectralPacket sp;
    sp.k_grid = k_grid;
    sp.psi_hat.resize(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double d = (k_grid[i] - p.k0) * p.b;
        sp.psi_hat[i] = std::exp(-0.5 * d * d);
    }
    sp.dispersion = free_dispersion(p.m, hbar);
    sp.validate();
    return sp;
}

/// Discrete delta at the grid node nearest k0, weighted 1/dk so that the
/// synthesized wave is the unit plane wave exp(i(k x - omega t)).
inline SpectralPacket delta_spectrum(double k0, const std::vector<double>& k_grid, Dispersion dispersion) {
    const double dk = uniform_spacing(k_grid);
    SpectralPacket sp;
    sp.k_grid = k_grid;
    sp.psi_hat.assign(k_grid.size(), complex{});
    const auto it = std::min_element(k_grid.begin(), k_grid.end(),
                                     [k0](double a, double b) { return std::abs(a - k0) < std::abs(b - k0); });
    sp.psi_hat[static_cast<std::size_t>(it - k_grid.begin())] = 1.0 / dk;
    sp.dispersion = std::move(dispersion);
    sp.validate();
    return sp;
}

/// psi(x, t) = int dk exp(i(k x - omega(k) t)) psi_hat(k), as a Riemann sum
/// on the uniform k grid.
inline ComplexGrid1D evolve(const SpectralPacket& sp, double t, const std::vector<double>& x_grid) {
    sp.validate();
    const double h = uniform_spacing(x_grid);
    const double dk = uniform_spacing(sp.k_grid);

    // At least four samples per shortest significant wavelength.
    double peak = 0.0;
    for (const auto& v : sp.psi_hat) peak = std::max(peak, std::abs(v));
    const double k_limit = std::numbers::pi / (2.0 * h);
    for (std::size_t i = 0; i < sp.k_grid.size(); ++i)
        if (std::abs(sp.psi_hat[i]) > 1e-10 * peak && std::abs(sp.k_grid[i]) > k_limit)
            throw resolution_error("evolve: x grid under-resolves the spectrum (aliasing)");

    std::vector<complex> coeff(sp.k_grid.size());
    for (std::size_t i = 0; i < coeff.size(); ++i)
        coeff[i] = dk * sp.psi_hat[i] * std::polar(1.0, -sp.dispersion(sp.k_grid[i]) * t);

    ComplexGrid1D out;
    out.x = x_grid;
    out.values.resize(x_grid.size());
    const double k_first = sp.k_grid.front();
    for (std::size_t j = 0; j < x_grid.size(); ++j) {
        const double x = x_grid[j];
        // exp(i k_m x) by recurrence, re-anchored every 256 modes.
        complex sum{};
        complex step = std::polar(1.0, dk * x);
        complex z{};
        for (std::size_t m = 0; m < coeff.size(); ++m) {
            if (m % 256 == 0) z = std::polar(1.0, (k_first + dk * static_cast<double>(m)) * x);
            sum += coeff[m] * z;
            z *= step;
        }
        out.values[j] = sum;
    }
    return out;
}

/// Wave-number grid dual to a uniform x grid of N points (spacing 2 pi/(N h),
/// centred on zero), for which analysis followed by synthesis is the identity.
inline std::vector<double> dual_k_grid(const std::vector<double>& x_grid) {
    const double h = uniform_spacing(x_grid);
    const std::size_t n = x_grid.size();
    const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * h);
    std::vector<double> k(n);
    const double offset = static_cast<double>(n / 2);
    for (std::size_t i = 0; i < n; ++i) k[i] = (static_cast<double>(i) - offset) * dk;
    return k;
}

/// psi_hat(k) = (1/2pi) sum_j h psi(x_j) exp(-i k x_j); inverse of the synthesis in evolve.
inline std::vector<complex> analyze(const ComplexGrid1D& f, const std::vector<double>& k_grid) {
    const double h = f.spacing();
    std::vector<complex> out(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        complex s{};
        for (std::size_t j = 0; j < f.size(); ++j) s += f.values[j] * std::polar(1.0, -k_grid[i] * f.x[j]);
        out[i] = s * h / (2.0 * std::numbers::pi);
    }
    return out;
}

/// |psi(x, t)|^2 of the evolved Gaussian packet in the closed form
///   (1 + s^2)^-1 exp[-b^-2 (1 + s^2)^-2 (x - hbar k0 t / m)^2],  s = hbar t / (m b^2).
/// Unit peak at t = 0.
inline double gaussian_norm_analytic(const GaussianPacketParams& p, double x, double t, double hbar = si::hbar) {
    p.validate();
    const double s2 = std::pow(hbar * t / (p.m * p.b * p.b), 2);
    const double g = 1.0 + s2;
    const double d = x - hbar * p.k0 * t / p.m;
    return std::exp(-d * d / (p.b * p.b * g * g)) / g;
}

/// |psi(x, t)|^2 for the same spectrum under free Schroedinger evolution,
///   (1 + s^2)^-1/2 exp[-b^-2 (1 + s^2)^-1 (x - hbar k0 t / m)^2].
/// Agrees with gaussian_norm_analytic only at t = 0.
inline double gaussian_density_schrodinger(const GaussianPacketParams& p, double x, double t,
                                           double hbar = si::hbar) {
    p.validate();
    const double g = 1.0 + std::pow(hbar * t / (p.m * p.b * p.b), 2);
    const double d = x - hbar * p.k0 * t / p.m;
    return std::exp(-d * d / (p.b * p.b * g)) / std::sqrt(g);
}

/// |psi(x, 0)|^2 at the peak for the Gaussian spectrum with unit height: (sqrt(2 pi)/b)^2.
inline double gaussian_peak_density(const GaussianPacketParams& p) {
    p.validate();
    return 2.0 * std::numbers::pi / (p.b * p.b);
}

// ---------------------------------------------------------------------------
// Intrinsic potential and force of an amplitude envelope

inline std::vector<double> intrinsic_potential(const std::vector<double>& envelope) {
    std::vector<double> phi(envelope.size());
    for (std::size_t i = 0; i < envelope.size(); ++i) {
        detail::require(std::isfinite(envelope[i]), "intrinsic_potential: non-finite envelope");
        phi[i] = envelope[i] * envelope[i];
    }
    return phi;
}

/// F = -d phi / dx with phi = envelope^2, by second-order finite differences.
inline std::vector<double> intrinsic_force(const std::vector<double>& envelope, double h) {
    auto f = gradient(intrinsic_potential(envelope), h);
    for (auto& v : f) v = -v;
    return f;
}

/// (2x / b^2) e^{-x^2/b^2}, the force of the Gaussian envelope e^{-x^2/2b^2}.
inline double gaussian_intrinsic_force(double x, double b) {
    return 2.0 * x / (b * b) * std::exp(-x * x / (b * b));
}

/// Per-mode intrinsic potential u^2 |psi0|^2 with u = hbar k / m.
inline double mode_intrinsic_potential(double k, complex amplitude, double mass, double hbar = si::hbar) {
    const double u = hbar * k / mass;
    return u * u * std::norm(amplitude);
}

/// max |psi* grad psi + psi grad psi*| on the grid. Zero when the amplitude
/// modulus is position independent.
inline double equilibrium_residual(const ComplexGrid1D& field) {
    // psi* psi' + psi psi'* is the derivative of |psi|^2.
    double r = 0.0;
    for (double v : gradient(field.density(), field.spacing())) r = std::max(r, std::abs(v));
    return r;
}

inline double total_probability(const ComplexGrid1D& f) { return trapezoid(f.density(), f.spacing()); }

}  // namespace qens

#endif
