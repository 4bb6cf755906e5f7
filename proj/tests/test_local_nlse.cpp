#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qens/local_nlse.hpp"

namespace {

using qens::complex;
using qens::LocalPlaneWave;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST(LocalRelations, Examples) {
    const double beta = qens::derived_constants().beta_el;
    EXPECT_NEAR(qens::local_relations(kTwoPi * beta / 3.0, 3.0, beta).lambda, 1.0, 1e-15);
    EXPECT_NEAR(qens::local_relations(beta, 1.0, beta).omega, 1.0, 1e-15);
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> U(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double rho = U(gen), u = U(gen), b = U(gen);
        const auto r = qens::local_relations(rho, u, b);
        EXPECT_NEAR(r.lambda * r.omega / kTwoPi, u, 1e-13 * u);
    }
    EXPECT_THROW(qens::local_relations(0.0, 1.0, beta), qens::domain_error);
    EXPECT_THROW(qens::local_relations(1.0, 0.0, beta), qens::domain_error);
}

TEST(WaveDispersion, Examples) {
    const auto unit = qens::wave_dispersion(1.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(unit.beta, 1.0);
    EXPECT_DOUBLE_EQ(unit.k, 1.0);
    for (double w : {0.3, 2.0, 17.0}) {
        const auto d = qens::wave_dispersion(2.5, 3.0, w);
        EXPECT_NEAR(d.k * 3.0, w, 1e-13 * w);
    }
    const auto c = qens::derived_constants();
    const double rho0 = c.m_electron / c.v_electron, u = 1e6;
    const double omega = rho0 * u * u / c.beta_el;
    EXPECT_NEAR(qens::wave_dispersion(rho0, u, omega).beta / c.beta_el, 1.0, 1e-14);
    EXPECT_THROW(qens::wave_dispersion(1.0, 1.0, 0.0), qens::domain_error);
}

TEST(LocalPlaneWave, OnShellConstruction) {
    const auto w = qens::on_shell_wave(complex(0.6, 0.8), 2.0, 0.5, 1.3);
    EXPECT_TRUE(w.on_shell());
    EXPECT_NEAR(w.rho0() * (w.u * w.u + w.phi), w.beta * w.omega, 1e-14);
    auto off = w;
    off.omega *= 1.001;
    EXPECT_FALSE(off.on_shell());
}

TEST(StationaryResidual, OnShellPlaneWaveSolvesTheSystem) {
    const auto w = qens::on_shell_wave(complex(1.0, 0.0), 4.0, 0.7, 1.0);
    const auto f = qens::sample_waves({w}, kTwoPi, 32);
    EXPECT_LT(qens::stationary_residual(f, w.omega), 1e-8);
}

TEST(StationaryResidual, ZeroFieldIsZero) {
    auto f = qens::sample_waves({qens::on_shell_wave(complex(1.0, 0.0), 2.0, 0.0, 1.0)}, kTwoPi, 16);
    for (auto& v : f.psi) v = 0.0;
    EXPECT_EQ(qens::stationary_residual(f, 3.0), 0.0);
}

TEST(StationaryResidual, OffShellPerturbation) {
    const auto w = qens::on_shell_wave(complex(0.0, 1.2), 3.0 / 1.44, 0.0, 1.0);
    const auto f = qens::sample_waves({w}, kTwoPi, 32);
    const double delta = 1e-3;
    const double expected = w.rho0() * w.beta * delta * std::abs(w.amplitude);
    EXPECT_NEAR(qens::stationary_residual(f, w.omega + delta), expected, 1e-8);
    EXPECT_NEAR(qens::best_fit_frequency(f), w.omega, 1e-9);
}

TEST(EvolveLocal, OnShellPlaneWaveIsStationary) {
    const auto w = qens::on_shell_wave(complex(1.0, 0.0), 4.0, 0.5, 1.0);
    const auto f = qens::sample_waves({w}, kTwoPi, 32);
    const double dt = 2e-4;
    const auto ev = qens::evolve_local(f, dt, 100, qens::default_density_floor(f));
    for (std::size_t i = 0; i < f.psi.size(); ++i)
        EXPECT_NEAR(std::abs(ev.field.psi[i]), std::abs(f.psi[i]), 1e-8);
    const double expected_phase = -100.0 * qens::crank_nicolson_phase(w.omega, dt);
    const complex ratio = ev.field.psi[5] / f.psi[5];
    EXPECT_NEAR(std::remainder(std::arg(ratio) - expected_phase, kTwoPi), 0.0, 1e-9);
    // Crank-Nicolson phase agrees with omega t to second order in omega dt.
    EXPECT_NEAR(std::remainder(std::arg(ratio) + w.omega * 100.0 * dt, kTwoPi), 0.0, 1e-5);
    EXPECT_EQ(ev.regularized_fraction, 0.0);
    EXPECT_EQ(ev.trace.size(), 101u);
}

TEST(EvolveLocal, ConstantFieldWithoutPotentialIsStationary) {
    qens::LocalField1D f;
    f.x = qens::periodic_grid(0.0, kTwoPi, 16);
    f.psi.assign(16, complex(0.3, 0.4));
    f.phi.assign(16, 0.0);
    const auto ev = qens::evolve_local(f, 1e-4, 50, qens::default_density_floor(f));
    for (const auto& v : ev.field.psi) EXPECT_NEAR(std::abs(v - complex(0.3, 0.4)), 0.0, 1e-14);
}

TEST(EvolveLocal, TwoModesDoNotSuperposeLinearly) {
    const auto w1 = qens::on_shell_wave(complex(1.0, 0.0), 4.0, 0.0, 1.0);
    const auto w2 = qens::on_shell_wave(complex(0.5, 0.0), 4.0, 0.0, 1.0);
    const auto both = qens::sample_waves({w1, w2}, kTwoPi, 32);
    const auto one = qens::sample_waves({w1}, kTwoPi, 32);
    const auto two = qens::sample_waves({w2}, kTwoPi, 32);
    const double dt = 5e-5;
    const std::size_t steps = 200;
    const auto eb = qens::evolve_local(both, dt, steps, qens::default_density_floor(both));
    const auto e1 = qens::evolve_local(one, dt, steps, qens::default_density_floor(one));
    const auto e2 = qens::evolve_local(two, dt, steps, qens::default_density_floor(two));
    double dev = 0.0;
    for (std::size_t i = 0; i < 32; ++i)
        dev = std::max(dev, std::abs(eb.field.psi[i] - (e1.field.psi[i] + e2.field.psi[i])));
    EXPECT_GT(dev, 1e-3);
    for (const auto& v : eb.field.psi) EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
}

TEST(EvolveLocal, DensityFloorKeepsNodesFinite) {
    const auto w1 = qens::on_shell_wave(complex(1.0, 0.0), 2.0, 0.0, 1.0);
    auto f = qens::sample_waves({w1, qens::on_shell_wave(complex(0.0, 1.0), 3.0, 0.0, 1.0)}, kTwoPi, 32);
    f.psi[0] = 0.0;
    const double eps = 0.05;
    const double dt = 0.05 / qens::max_grid_frequency(f, eps);
    const auto ev = qens::evolve_local(f, dt, 20, eps);
    for (const auto& v : ev.field.psi) ASSERT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
    EXPECT_GT(ev.regularized_fraction, 0.0);
}

TEST(EvolveLocal, RejectsUnresolvedStep) {
    const auto f = qens::sample_waves({qens::on_shell_wave(complex(1.0, 0.0), 4.0, 0.0, 1.0)}, kTwoPi, 32);
    EXPECT_THROW(qens::evolve_local(f, 1e-2, 10, 1e-12), qens::domain_error);
    EXPECT_THROW(qens::evolve_local(f, 1e-5, 10, 0.0), qens::domain_error);
}

TEST(Superposition, VanishingSecondWaveRecoversSingleWave) {
    const auto w1 = qens::on_shell_wave(complex(0.8, 0.0), 1.5, 0.3, 2.0);
    const auto w2 = qens::on_shell_wave(complex(0.0, 0.0), 1.1, 0.3, 2.0);
    const auto r = qens::superposition_residual(w1, w2, 0.4, 0.2);
    EXPECT_NEAR(r.lhs, w1.beta * w1.omega, 1e-14);
    EXPECT_NEAR(r.deviation, 0.0, 1e-14);
}

TEST(Superposition, EqualUnitAmplitudesInPhase) {
    const auto w1 = qens::on_shell_wave(complex(1.0, 0.0), 1.0, 0.0, 1.0);
    const auto w2 = qens::on_shell_wave(complex(1.0, 0.0), 2.0, 0.0, 1.0);
    const auto r = qens::superposition_residual(w1, w2, 0.0, 0.0);
    // |psi1 + psi2|^2 = 4, so the lhs is a quarter of beta (w1 + w2).
    EXPECT_NEAR(r.lhs, (w1.omega + w2.omega) / 4.0, 1e-15);
    EXPECT_NEAR(r.rhs, w1.omega + w2.omega, 1e-15);
    EXPECT_LT(r.deviation, 0.0);
}

TEST(Superposition, DualImplementationsAgree) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> U(0.2, 2.0), P(-3.0, 3.0);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        const double phi = U(gen), beta = U(gen);
        const auto w1 = qens::on_shell_wave(std::polar(U(gen), P(gen)), U(gen), phi, beta);
        const auto w2 = qens::on_shell_wave(std::polar(U(gen), P(gen)), U(gen), phi, beta);
        const double x = P(gen), t = P(gen);
        qens::SuperpositionResidual a, b;
        try {
            a = qens::superposition_residual(w1, w2, x, t);
            b = qens::superposition_residual_phase_form(w1, w2, x, t);
        } catch (const qens::unsupported_regime&) {
            continue;
        }
        const double scale = std::max({1.0, std::abs(a.lhs), std::abs(a.rhs)});
        ASSERT_NEAR(a.lhs, b.lhs, 1e-12 * scale);
        ASSERT_NEAR(a.deviation, b.deviation, 1e-12 * scale);
        EXPECT_GT(std::abs(a.deviation), 1e-12 * scale);
        ++checked;
    }
    EXPECT_GT(checked, 1900);
}

TEST(Superposition, TermByTermGenericCase) {
    const auto w1 = qens::on_shell_wave(complex(0.7, 0.2), 1.3, 0.4, 1.1);
    const auto w2 = qens::on_shell_wave(complex(-0.3, 0.9), 0.6, 0.4, 1.1);
    const double x = 0.37, t = 1.9;
    const complex s = w1(x, t) + w2(x, t);
    const double S = std::norm(s), A = w1.rho0(), B = w2.rho0();
    const double lhs = 1.1 * (A * w1.omega + B * w2.omega) / S + 0.4 * (S * S - A * A - B * B) / S;
    const auto r = qens::superposition_residual(w1, w2, x, t);
    EXPECT_NEAR(r.lhs, lhs, 1e-12);
    EXPECT_NEAR(r.deviation, lhs - 1.1 * (w1.omega + w2.omega), 1e-12);
    EXPECT_GT(std::abs(r.deviation), 1e-3);
}

TEST(Superposition, DestructiveInterferenceFlagged) {
    const auto w1 = qens::on_shell_wave(complex(1.0, 0.0), 1.0, 0.0, 1.0);
    const auto w2 = qens::on_shell_wave(complex(-1.0, 0.0), 1.0, 0.0, 1.0);
    EXPECT_THROW(qens::superposition_residual(w1, w2, 0.0, 0.0), qens::unsupported_regime);
    EXPECT_THROW(qens::superposition_residual_phase_form(w1, w2, 0.0, 0.0), qens::unsupported_regime);
}

TEST(Superposition, RequiresOnShellWaves) {
    auto w1 = qens::on_shell_wave(complex(1.0, 0.0), 1.0, 0.0, 1.0);
    const auto w2 = qens::on_shell_wave(complex(0.5, 0.0), 1.0, 0.0, 1.0);
    w1.omega += 0.1;
    EXPECT_THROW(qens::superposition_residual(w1, w2, 0.0, 0.0), qens::domain_error);
}

TEST(InterferenceGamma, PrintedValues) {
    const double beta = qens::derived_constants().beta_el;
    EXPECT_NEAR(qens::interference_gamma(0.0, beta), 3.0 * beta / 14.0, 1e-12 * beta);
    EXPECT_NEAR(qens::interference_gamma(std::numbers::pi / 2.0, beta), beta / 2.0, 1e-12 * beta);
    EXPECT_NEAR(qens::interference_gamma(std::numbers::pi, beta), beta / 2.0, 1e-12 * beta);
    EXPECT_NEAR(qens::interference_gamma(0.0), 3.0 * beta / 14.0, 1e-12 * beta);
}

TEST(InterferenceGamma, EvenAndPeriodic) {
    for (double p : {0.1, 0.9, 1.7, 2.6, 3.0}) {
        EXPECT_NEAR(qens::interference_gamma(p, 1.0), qens::interference_gamma(-p, 1.0), 1e-12);
        EXPECT_NEAR(qens::interference_gamma(p, 1.0), qens::interference_gamma(p + kTwoPi, 1.0), 1e-9);
    }
}

TEST(InterferenceGamma, SingularPhasesRejected) {
    const double crit = std::acos(-1.0 + 1.0 / std::numbers::sqrt2);
    EXPECT_THROW(qens::interference_gamma(crit, 1.0), qens::domain_error);
    EXPECT_THROW(qens::interference_gamma(kTwoPi - crit, 1.0), qens::domain_error);
    EXPECT_NO_THROW(qens::interference_gamma(crit + 1e-3, 1.0));
}

TEST(WaveEquationContrast, LinearEquationAcceptsSuperposition) {
    const auto w1 = qens::on_shell_wave(complex(1.0, 0.0), 4.0, 0.0, 1.0);
    const auto w2 = qens::on_shell_wave(complex(0.5, 0.0), 4.0, 0.0, 1.0);
    ASSERT_NEAR(w1.omega / w1.wave_number(), w2.omega / w2.wave_number(), 1e-14);
    auto at = [&](double t) { return qens::sample_waves({w1, w2}, kTwoPi, 32, t).psi; };
    EXPECT_LT(qens::wave_equation_residual(at, kTwoPi, 0.3, 4.0), 1e-8);
    const auto f = qens::sample_waves({w1, w2}, kTwoPi, 32, 0.3);
    EXPECT_GT(qens::stationary_residual(f, qens::best_fit_frequency(f)), 1e-3);
    // Each mode alone satisfies the local system.
    EXPECT_LT(qens::stationary_residual(qens::sample_waves({w1}, kTwoPi, 32), w1.omega), 1e-8);
    EXPECT_LT(qens::stationary_residual(qens::sample_waves({w2}, kTwoPi, 32), w2.omega), 1e-8);
}

}  // namespace
