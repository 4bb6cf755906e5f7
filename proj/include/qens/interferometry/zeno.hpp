#ifndef QENS_INTERFEROMETRY_ZENO_HPP
#define QENS_INTERFEROMETRY_ZENO_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include "qens/error.hpp"

// Survival of an initial state under repeated projective measurement.
// Hamiltonians are in units with hbar = 1.

namespace qens {

struct ZenoSystem {
    Eigen::MatrixXcd H;
    Eigen::VectorXcd initial;

    void validate() const {
        detail::require(H.rows() == H.cols() && H.rows() >= 1, "ZenoSystem: H must be square");
        detail::require(H.rows() <= 64, "ZenoSystem: dimension limited to 64");
        detail::require(initial.size() == H.rows(), "ZenoSystem: state dimension mismatch");
        const double asym = (H - H.adjoint()).cwiseAbs().maxCoeff();
        detail::require(asym <= 1e-12, "ZenoSystem: H is not Hermitian");
        detail::require(std::abs(initial.norm() - 1.0) <= 1e-12, "ZenoSystem: initial state must be normalized");
    }
};

/// (Delta H)^2 = <H^2> - <H>^2 in the initial state.
inline double energy_variance(const ZenoSystem& z) {
    z.validate();
    const Eigen::VectorXcd h = z.H * z.initial;
    const double mean = z.initial.dot(h).real();
    return h.squaredNorm() - mean * mean;
}

struct ZenoEstimate {
    double probability = 1.0;
    bool valid = true;  // false when the second-order expansion is out of range
};

/// 1 - dH2 t^2.
inline ZenoEstimate zeno_second_order_survival(double dH2, double t) {
    detail::require(dH2 >= 0.0, "zeno_second_order_survival: variance must be non-negative");
    return {1.0 - dH2 * t * t, dH2 * t * t < 1.0};
}

/// [1 - dH2 (t/n)^2]^n for n equally spaced measurements.
inline ZenoEstimate zeno_repeated_measurement(double dH2, double t, long n) {
    detail::require(dH2 >= 0.0, "zeno_repeated_measurement: variance must be non-negative");
    detail::require(n >= 1, "zeno_repeated_measurement: need at least one measurement");
    const double tau = t / static_cast<double>(n);
    const double x = dH2 * tau * tau;
    const double nd = static_cast<double>(n);
    const double p = x < 1.0 ? std::exp(nd * std::log1p(-x)) : std::pow(1.0 - x, nd);
    return {p, x < 1.0};
}

struct ZenoEvolution {
    double survival = 1.0;                 // |<initial| e^{-iHt} |initial>|^2
    Eigen::VectorXcd state;                // e^{-iHt} |initial>
    Eigen::VectorXcd interaction_amplitudes;  // a_j(t), psi = sum a_j u_j e^{-i E_j t}
    double picture_discrepancy = 0.0;      // max_j |a_j e^{-i E_j t} - state_j|
};

/// Exact survival by eigendecomposition. Also integrates the interaction-
/// picture equations i da_j/dt = sum_k V_jk a_k e^{i(E_j - E_k)t}, with E the
/// diagonal and V the off-diagonal part of H, and reports how far they are
/// from the exact state.
inline ZenoEvolution zeno_exact_evolution(const ZenoSystem& z, double t) {
    z.validate();
    using C = std::complex<double>;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(z.H);
    const Eigen::VectorXcd phases =
        eig.eigenvalues().unaryExpr([t](double e) { return std::polar(1.0, -e * t); }).cast<C>();
    ZenoEvolution out;
    out.state = eig.eigenvectors() * phases.asDiagonal() * (eig.eigenvectors().adjoint() * z.initial);
    out.survival = std::norm(z.initial.dot(out.state));

    const Eigen::Index n = z.H.rows();
    const Eigen::VectorXd energies = z.H.diagonal().real();
    Eigen::MatrixXcd V = z.H;
    V.diagonal().setZero();

    using State = std::vector<C>;
    State a(z.initial.data(), z.initial.data() + n);
    auto rhs = [&](const State& x, State& dxdt, double s) {
        for (Eigen::Index j = 0; j < n; ++j) {
            C acc{};
            for (Eigen::Index k = 0; k < n; ++k)
                if (V(j, k) != C{}) acc += V(j, k) * x[k] * std::polar(1.0, (energies(j) - energies(k)) * s);
            dxdt[j] = C(0.0, -1.0) * acc;
        }
    };
    if (t != 0.0) {
        namespace ode = boost::numeric::odeint;
        auto stepper = ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_dopri5<State>());
        ode::integrate_adaptive(stepper, rhs, a, 0.0, t, t / 100.0);
    }
    out.interaction_amplitudes = Eigen::Map<Eigen::VectorXcd>(a.data(), n);
    for (Eigen::Index j = 0; j < n; ++j)
        out.picture_discrepancy =
            std::max(out.picture_discrepancy, std::abs(a[j] * std::polar(1.0, -energies(j) * t) - out.state(j)));
    return out;
}

/// cos^{2n}(pi / 2n): n rotators each turning by pi/2n, each followed by a
/// polarizer. `element_transmittance` multiplies once per optical element
/// (2n elements).
inline double polarizer_chain_transmission(long n, double element_transmittance = 1.0) {
    detail::require(n >= 1, "polarizer_chain_transmission: need at least one rotator");
    detail::require(element_transmittance >= 0.0 && element_transmittance <= 1.0,
                    "polarizer_chain_transmission: transmittance must lie in [0, 1]");
    const double c = std::cos(std::numbers::pi / (2.0 * static_cast<double>(n)));
    return std::pow(c * c * element_transmittance * element_transmittance, static_cast<double>(n));
}

}  // namespace qens

#endif
