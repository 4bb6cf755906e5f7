#ifndef QENS_LOCAL_NLSE_HPP
#define QENS_LOCAL_NLSE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qens/constants.hpp"
#include "qens/error.hpp"
#include "qens/grid.hpp"
#include "qens/quadrature.hpp"
#include "qens/spectral.hpp"

// Local (density-dependent) Schroedinger system
//   A  [-beta^2 Lap + rho0^2 phi] psi = rho0 beta omega psi
//   B  [-beta^2 Lap + rho0^2 phi] psi = i rho0 beta dpsi/dt
//   C  rho0 = |psi|^2
// on a periodic 1D grid. phi is a scalar profile in the equation's own units.

namespace qens {

struct LocalRelations {
    double lambda = 0.0;  // m
    double omega = 0.0;   // rad/s
};

/// lambda = 2 pi beta / (rho0 u),  omega = rho0 u^2 / beta.
inline LocalRelations local_relations(double rho0, double u, double beta = derived_constants().beta_el) {
    detail::require(rho0 > 0.0 && u > 0.0, "local_relations: density and velocity must be positive");
    detail::require(beta > 0.0, "local_relations: beta must be positive");
    return {2.0 * std::numbers::pi * beta / (rho0 * u), rho0 * u * u / beta};
}

struct WaveDispersion {
    double beta = 0.0;
    double k = 0.0;
};

/// Dispersion of the monochromatic solution of the linear wave equation:
/// beta = rho0 u^2 / omega, k = rho0 u / beta = omega / u.
inline WaveDispersion wave_dispersion(double rho0, double u, double omega) {
    detail::require(omega > 0.0, "wave_dispersion: omega must be positive");
    detail::require(u != 0.0, "wave_dispersion: u must be non-zero");
    WaveDispersion d;
    d.beta = rho0 * u * u / omega;
    d.k = omega / u;
    return d;
}

/// psi = psi0 exp(i (rho0 u / beta) x - i omega t), rho0 = |psi0|^2.
struct LocalPlaneWave {
    complex amplitude{1.0, 0.0};
    double u = 1.0;
    double omega = 1.0;
    double phi = 0.0;
    double beta = 1.0;

    double rho0() const { return std::norm(amplitude); }
    double wave_number() const { return rho0() * u / beta; }
    complex operator()(double x, double t) const {
        return amplitude * std::polar(1.0, wave_number() * x - omega * t);
    }
    /// |psi0|^2 (u^2 + phi) - beta omega, relative to beta omega.
    double shell_defect() const {
        const double lhs = rho0() * (u * u + phi);
        const double rhs = beta * omega;
        return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    }
    bool on_shell(double tol = 1e-10) const { return shell_defect() <= tol; }
};

/// Plane wave with omega fixed by |psi0|^2 (u^2 + phi) = beta omega.
inline LocalPlaneWave on_shell_wave(complex amplitude, double u, double phi, double beta) {
    detail::require(beta > 0.0, "on_shell_wave: beta must be positive");
    LocalPlaneWave w;
    w.amplitude = amplitude;
    w.u = u;
    w.phi = phi;
    w.beta = beta;
    w.omega = std::norm(amplitude) * (u * u + phi) / beta;
    return w;
}

struct LocalField1D {
    std::vector<double> x;       // periodic grid, uniform, last point excluded
    std::vector<complex> psi;
    std::vector<double> phi;     // external potential profile
    double beta = 1.0;

    double spacing() const { return uniform_spacing(x); }
    double length() const { return spacing() * static_cast<double>(x.size()); }

    void validate() const {
        detail::require(x.size() >= 4, "LocalField1D: need at least four grid points");
        detail::require(psi.size() == x.size() && phi.size() == x.size(), "LocalField1D: size mismatch");
        detail::require(beta > 0.0, "LocalField1D: beta must be positive");
        uniform_spacing(x);
        for (const auto& v : psi)
            detail::require(std::isfinite(v.real()) && std::isfinite(v.imag()), "LocalField1D: non-finite psi");
    }

    double max_density() const {
        double m = 0.0;
        for (const auto& v : psi) m = std::max(m, std::norm(v));
        return m;
    }
};

/// Samples a sum of plane waves at time t on the periodic grid [0, L).
inline LocalField1D sample_waves(const std::vector<LocalPlaneWave>& waves, double length, std::size_t n,
                                 double t = 0.0) {
    detail::require(!waves.empty(), "sample_waves: no waves");
    LocalField1D f;
    f.x = periodic_grid(0.0, length, n);
    f.psi.assign(n, complex{});
    f.phi.assign(n, waves.front().phi);
    f.beta = waves.front().beta;
    for (const auto& w : waves)
        for (std::size_t i = 0; i < n; ++i) f.psi[i] += w(f.x[i], t);
    return f;
}

namespace detail {

// [-beta^2 Lap + rho^2 phi] psi with rho given pointwise.
inline std::vector<complex> local_operator(const SpectralLaplacian& lap, const std::vector<complex>& psi,
                                           const std::vector<double>& rho, const std::vector<double>& phi,
                                           double beta) {
    auto out = lap(psi);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -beta * beta * out[i] + rho[i] * rho[i] * phi[i] * psi[i];
    return out;
}

inline std::vector<double> densities(const std::vector<complex>& psi) {
    std::vector<double> r(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) r[i] = std::norm(psi[i]);
    return r;
}

}  // namespace detail

/// max |[-beta^2 Lap + rho0^2 phi] psi - rho0 beta omega psi|, rho0 = |psi|^2,
/// with a spectral Laplacian.
inline double stationary_residual(const LocalField1D& f, double omega) {
    f.validate();
    SpectralLaplacian lap(f.x.size(), f.length());
    const auto rho = detail::densities(f.psi);
    const auto lhs = detail::local_operator(lap, f.psi, rho, f.phi, f.beta);
    double r = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) r = std::max(r, std::abs(lhs[i] - rho[i] * f.beta * omega * f.psi[i]));
    return r;
}

/// Frequency minimizing the L2 stationary residual of the field.
inline double best_fit_frequency(const LocalField1D& f) {
    f.validate();
    SpectralLaplacian lap(f.x.size(), f.length());
    const auto rho = detail::densities(f.psi);
    const auto lhs = detail::local_operator(lap, f.psi, rho, f.phi, f.beta);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const complex basis = rho[i] * f.beta * f.psi[i];
        num += (std::conj(basis) * lhs[i]).real();
        den += std::norm(basis);
    }
    detail::require(den > 0.0, "best_fit_frequency: zero field");
    return num / den;
}

struct LocalStep {
    double t = 0.0;
    double max_abs = 0.0;
    double total_density = 0.0;  // int rho0 dx
    int iterations = 0;
};

struct LocalEvolution {
    LocalField1D field;
    std::vector<LocalStep> trace;      // one entry per step plus the initial state
    double regularized_fraction = 0.0; // largest share of grid points held at the density floor
};

/// Default density floor: 1e-12 of the peak density.
inline double default_density_floor(const LocalField1D& f) { return 1e-12 * std::max(f.max_density(), 1e-300); }

/// Largest frequency the grid supports: beta k_nyq^2 / rho_min + rho_max |phi|_max / beta.
inline double max_grid_frequency(const LocalField1D& f, double epsilon) {
    SpectralLaplacian lap(f.x.size(), f.length());
    double rho_min = std::numeric_limits<double>::infinity(), rho_max = 0.0, phi_max = 0.0;
    for (std::size_t i = 0; i < f.psi.size(); ++i) {
        const double r = std::max(std::norm(f.psi[i]), epsilon);
        rho_min = std::min(rho_min, r);
        rho_max = std::max(rho_max, r);
        phi_max = std::max(phi_max, std::abs(f.phi[i]));
    }
    return f.beta * lap.max_k2() / rho_min + rho_max * phi_max / f.beta;
}

/// Integrates i rho0 beta dpsi/dt = [-beta^2 Lap + rho0^2 phi] psi with a
/// Crank-Nicolson average, rho0 = max((|psi_n|^2 + |psi_{n+1}|^2)/2, epsilon)
/// frozen per fixed-point iterate. Each step iterates until successive iterates differ
/// by less than 1e-12 (relative to max |psi|), at most 50 times.
inline LocalEvolution evolve_local(const LocalField1D& initial, double dt, std::size_t steps, double epsilon) {
    initial.validate();
    detail::require(dt > 0.0, "evolve_local: dt must be positive");
    detail::require(epsilon > 0.0, "evolve_local: density floor must be positive");
    const double w_max = max_grid_frequency(initial, epsilon);
    detail::require(dt * w_max < 0.1, "evolve_local: dt does not resolve the grid frequency (need dt*omega_max < 0.1)");

    const std::size_t n = initial.x.size();
    const double h = initial.spacing();
    SpectralLaplacian lap(n, initial.length());
    const double beta = initial.beta;

    LocalEvolution out;
    out.field = initial;
    auto record = [&](double t, int iters) {
        LocalStep s;
        s.t = t;
        s.iterations = iters;
        std::vector<double> rho(n);
        for (std::size_t i = 0; i < n; ++i) {
            rho[i] = std::norm(out.field.psi[i]);
            s.max_abs = std::max(s.max_abs, std::sqrt(rho[i]));
        }
        s.total_density = 0.0;
        for (double r : rho) s.total_density += r * h;  // periodic trapezoid
        out.trace.push_back(s);
    };
    record(0.0, 0);

    std::vector<complex> next(n), mid(n);
    std::vector<double> rho(n);
    for (std::size_t step = 0; step < steps; ++step) {
        const auto& cur = out.field.psi;
        double scale = 0.0;
        for (const auto& v : cur) scale = std::max(scale, std::abs(v));
        scale = std::max(scale, 1.0e-300);
        next = cur;
        int iters = 0;
        double floored_share = 0.0;
        for (;;) {
            if (++iters > 50)
                throw convergence_error("evolve_local: fixed-point iteration did not converge in 50 iterations at step " +
                                        std::to_string(step));
            std::size_t floored = 0;
            for (std::size_t i = 0; i < n; ++i) {
                mid[i] = 0.5 * (cur[i] + next[i]);
                const double r = 0.5 * (std::norm(cur[i]) + std::norm(next[i]));
                if (r < epsilon) ++floored;
                rho[i] = std::max(r, epsilon);
            }
            floored_share = static_cast<double>(floored) / static_cast<double>(n);
            const auto rhs = detail::local_operator(lap, mid, rho, out.field.phi, beta);
            double change = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const complex updated = cur[i] - complex(0.0, dt / (rho[i] * beta)) * rhs[i];
                change = std::max(change, std::abs(updated - next[i]));
                next[i] = updated;
            }
            if (change < 1e-12 * scale) break;
        }
        out.field.psi = next;
        out.regularized_fraction = std::max(out.regularized_fraction, floored_share);
        for (const auto& v : next)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw convergence_error("evolve_local: non-finite field");
        record(dt * static_cast<double>(step + 1), iters);
    }
    return out;
}

/// Phase advance per step of Crank-Nicolson for a single mode of frequency omega.
inline double crank_nicolson_phase(double omega, double dt) { return 2.0 * std::atan(0.5 * omega * dt); }

// ---------------------------------------------------------------------------
// Superposition of two local plane waves

struct SuperpositionResidual {
    double lhs = 0.0;        // H psi_s as given by the interference expression
    double rhs = 0.0;        // beta (omega1 + omega2)
    double deviation = 0.0;  // lhs - rhs
};

namespace detail {
inline void check_pair(const LocalPlaneWave& w1, const LocalPlaneWave& w2) {
    require(w1.beta == w2.beta, "superposition_residual: waves must share beta");
    require(w1.phi == w2.phi, "superposition_residual: waves must share the external potential");
    require(w1.on_shell(1e-10) && w2.on_shell(1e-10), "superposition_residual: both waves must be on-shell");
}
inline SuperpositionResidual assemble(double a1sq, double a2sq, double s, const LocalPlaneWave& w1,
                                      const LocalPlaneWave& w2, double floor_scale) {
    if (s < 1e-12 * floor_scale)
        throw unsupported_regime("superposition_residual: |psi1 + psi2|^2 vanishes (destructive interference)");
    SuperpositionResidual r;
    r.lhs = w1.beta * (a1sq * w1.omega + a2sq * w2.omega) / s + w1.phi * (s * s - a1sq * a1sq - a2sq * a2sq) / s;
    r.rhs = w1.beta * (w1.omega + w2.omega);
    r.deviation = r.lhs - r.rhs;
    return r;
}
}  // namespace detail

/// Evaluates
///   beta (|psi0^1|^2 w1 + |psi0^2|^2 w2) / |psi1+psi2|^2
///     + phi (|psi1+psi2|^4 - |psi0^1|^4 - |psi0^2|^4) / |psi1+psi2|^2
/// at (x, t) and compares it with beta (w1 + w2).
inline SuperpositionResidual superposition_residual(const LocalPlaneWave& w1, const LocalPlaneWave& w2, double x,
                                                    double t) {
    detail::check_pair(w1, w2);
    const double s = std::norm(w1(x, t) + w2(x, t));
    return detail::assemble(w1.rho0(), w2.rho0(), s, w1, w2, w1.rho0() + w2.rho0());
}

/// Same quantity with |psi1+psi2|^2 expanded in the relative phase,
/// a1^2 + a2^2 + 2 a1 a2 cos(dphi). Used as an independent cross-check.
inline SuperpositionResidual superposition_residual_phase_form(const LocalPlaneWave& w1, const LocalPlaneWave& w2,
                                                               double x, double t) {
    detail::check_pair(w1, w2);
    const double a1 = std::abs(w1.amplitude), a2 = std::abs(w2.amplitude);
    const double dphi = (w1.wave_number() - w2.wave_number()) * x - (w1.omega - w2.omega) * t +
                        std::arg(w1.amplitude) - std::arg(w2.amplitude);
    const double s = a1 * a1 + a2 * a2 + 2.0 * a1 * a2 * std::cos(dphi);
    return detail::assemble(a1 * a1, a2 * a2, s, w1, w2, a1 * a1 + a2 * a2);
}

/// Gamma = beta (1 + 2 cos dphi) / (4 (1 + cos dphi)^2 - 2).
inline double interference_gamma(double delta_phi, double beta = derived_constants().beta_el) {
    const double c = std::cos(delta_phi);
    const double den = 4.0 * (1.0 + c) * (1.0 + c) - 2.0;
    if (std::abs(den) < 1e-9) {
        const double crit = std::acos(-1.0 + 1.0 / std::numbers::sqrt2);
        throw domain_error("interference_gamma: singular at cos(dphi) = -1 + 1/sqrt(2), dphi = " +
                           std::to_string(crit) + " or " + std::to_string(2.0 * std::numbers::pi - crit));
    }
    return beta * (1.0 + 2.0 * c) / den;
}

// ---------------------------------------------------------------------------
// Linear wave equation, for contrast with the local system

/// max |Lap psi - u^-2 d^2 psi/dt^2| at time t: spectral Laplacian in x,
/// eighth-order central difference with step dt in time.
inline double wave_equation_residual(const std::function<std::vector<complex>(double)>& field_at, double length,
                                     double t, double u, double dt = 1e-2) {
    static constexpr double c[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};
    const auto centre = field_at(t);
    SpectralLaplacian lap(centre.size(), length);
    const auto lapl = lap(centre);
    std::vector<complex> tt(centre.size());
    for (std::size_t i = 0; i < tt.size(); ++i) tt[i] = c[0] * centre[i];
    for (int j = 1; j <= 4; ++j) {
        const auto plus = field_at(t + j * dt), minus = field_at(t - j * dt);
        for (std::size_t i = 0; i < tt.size(); ++i) tt[i] += c[j] * (plus[i] + minus[i]);
    }
    double r = 0.0;
    for (std::size_t i = 0; i < tt.size(); ++i) r = std::max(r, std::abs(lapl[i] - tt[i] / (dt * dt * u * u)));
    return r;
}

}  // namespace qens

#endif
