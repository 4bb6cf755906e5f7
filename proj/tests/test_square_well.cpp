#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "qens/grid.hpp"
#include "qens/square_well.hpp"

namespace {

using qens::WellGeometry;

constexpr double kPi = std::numbers::pi;

WellGeometry unit_well() {
    WellGeometry g;
    g.x0 = 1.0;
    g.V0 = 10.0;
    g.m = 1.0;
    g.hbar = 1.0;
    return g;
}

double gk(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

// Raw member wave written out from the piecewise definition, independent of the library.
double raw_wave(double phi0, double k1, double k2, double x0, double x) {
    if (x <= -x0) return phi0 * std::exp(k2 * x);
    if (x >= x0) return phi0 * std::exp(-k2 * x);
    return phi0 * std::exp(-k2 * x0) * std::cos(k1 * x) / std::cos(k1 * x0);
}

double raw_amplitude(double m, double k1, double k2, double x0) {
    return std::sqrt(m * k2 / (1.0 + k2 * x0)) * std::exp(k2 * x0) * std::cos(k1 * x0);
}

TEST(PartnerK, Examples) {
    const auto g = unit_well();
    EXPECT_NEAR(qens::partner_k(1.0, g), 3.0, 1e-15);
    EXPECT_EQ(qens::partner_k(std::sqrt(10.0), g), 0.0);
    EXPECT_NEAR(qens::partner_k(0.0, g), std::sqrt(10.0), 1e-15);
    EXPECT_THROW(qens::partner_k(4.0, g), qens::domain_error);
    EXPECT_THROW(qens::partner_k(-0.1, g), qens::domain_error);
}

TEST(PartnerK, Involution) {
    const auto g = unit_well();
    for (double k : {0.0, 0.3, 1.0, 2.2, 3.1}) EXPECT_NEAR(qens::partner_k(qens::partner_k(k, g), g), k, 1e-12);
}

TEST(PartnerK, SumOfSquaresSI) {
    WellGeometry g;
    g.x0 = 1e-9;
    g.V0 = 1.6e-19;
    g.m = qens::si::electron_mass;
    for (double f : {0.1, 0.5, 0.9}) {
        const double k1 = f * std::sqrt(g.k_squared_total());
        const double k2 = qens::partner_k(k1, g);
        EXPECT_NEAR((k1 * k1 + k2 * k2) / g.k_squared_total(), 1.0, 1e-12);
    }
}

TEST(MemberWavefunction, ContinuousAtWalls) {
    const auto g = unit_well();
    for (double k1 : {0.2, 0.9, 1.4, 2.5, 3.0}) {
        const auto mem = qens::make_member(k1, g);
        for (double wall : {-g.x0, g.x0}) {
            const double in = qens::member_wavefunction(mem, g, wall * (1.0 - 1e-15));
            const double out = qens::member_wavefunction(mem, g, wall * (1.0 + 1e-15));
            const double at = qens::member_wavefunction(mem, g, wall);
            EXPECT_NEAR(in, out, 1e-12 * std::max(1.0, std::abs(at)));
            EXPECT_NEAR(at, mem.phi0 * std::exp(-mem.k2 * g.x0), 1e-12 * std::max(1.0, std::abs(at)));
        }
    }
}

TEST(MemberWavefunction, CentreAndDecay) {
    const auto g = unit_well();
    const auto mem = qens::make_member(0.7, g);
    EXPECT_NEAR(qens::member_wavefunction(mem, g, 0.0),
                mem.phi0 * std::exp(-mem.k2 * g.x0) / std::cos(mem.k1 * g.x0), 1e-14);
    EXPECT_LT(std::abs(qens::member_wavefunction(mem, g, 60.0)), 1e-50);
}

TEST(MemberWavefunction, SingularMemberRejected) {
    const auto g = unit_well();
    qens::WellMember mem;
    mem.k1 = std::numbers::pi / 2.0;
    mem.k2 = qens::partner_k(mem.k1, g);
    mem.phi0 = 1.0;
    EXPECT_THROW(qens::member_wavefunction(mem, g, 0.0), qens::singular_member);
}

TEST(MemberAmplitude, MatchesPrintedFormula) {
    const auto g = unit_well();
    for (double k1 : {0.1, 1.0, 1.5}) {
        const double k2 = qens::partner_k(k1, g);
        EXPECT_NEAR(qens::member_amplitude(k1, k2, g).value, raw_amplitude(1.0, k1, k2, 1.0), 1e-13);
    }
    EXPECT_TRUE(qens::member_amplitude(2.0, qens::partner_k(2.0, g), g).anomalous);
    EXPECT_FALSE(qens::member_amplitude(1.0, 3.0, g).anomalous);
}

TEST(MemberAmplitude, VanishesAsK2GoesToZero) {
    const auto g = unit_well();
    EXPECT_EQ(qens::member_amplitude(1.0, 0.0, g).value, 0.0);
    EXPECT_LT(std::abs(qens::member_amplitude(1.0, 1e-12, g).value), 1e-5);
}

double brute_force_amplitude(double k1, const WellGeometry& g) {
    const double k2 = qens::partner_k(k1, g);
    auto sq = [&](double x) {
        const double v = raw_wave(1.0, k1, k2, g.x0, x);
        return v * v;
    };
    const double inf = std::numeric_limits<double>::infinity();
    const double norm = gk(sq, -inf, -g.x0) + gk(sq, -g.x0, g.x0) + gk(sq, g.x0, inf);
    return std::sqrt(g.m / norm);
}

TEST(MemberAmplitude, MatchedMembersAreNormalized) {
    const auto g = unit_well();
    const auto roots = qens::matched_members(g);
    ASSERT_FALSE(roots.empty());
    for (double k1 : roots) {
        const double k2 = qens::partner_k(k1, g);
        EXPECT_NEAR(std::tan(k1 * g.x0), k2 / k1, 1e-9);
        const double closed_form = std::abs(qens::member_amplitude(k1, k2, g).value);
        EXPECT_NEAR(closed_form / brute_force_amplitude(k1, g), 1.0, 1e-6) << "k1=" << k1;
        EXPECT_NEAR(qens::amplitude_deviation(k1, g), 0.0, 1e-10);
    }
}

TEST(MemberAmplitude, GenericMembersDeviate) {
    const auto g = unit_well();
    for (double k1 : {0.3, 0.8, 2.0}) {
        const double k2 = qens::partner_k(k1, g);
        const double dev = std::abs(qens::member_amplitude(k1, k2, g).value) / brute_force_amplitude(k1, g) - 1.0;
        EXPECT_GT(std::abs(dev), 1e-3);
        EXPECT_NEAR(qens::amplitude_deviation(k1, g), dev, 1e-8);
    }
}

TEST(WellDensity, ParityExact) {
    const auto g = unit_well();
    const auto grid = qens::linspace(-3.0, 3.0, 61);
    const auto d = qens::well_ensemble_density(g, 5.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(d.w[i], d.w[grid.size() - 1 - i], 1e-12);
}

TEST(WellDensity, DecreasesOutsideWell) {
    const auto g = unit_well();
    const auto grid = qens::linspace(1.05, 6.0, 50);
    const auto d = qens::well_ensemble_density(g, 5.0, grid);
    for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_LT(d.w[i], d.w[i - 1]);
}

TEST(WellDensity, CentreToOutsideRatioMatchesNestedQuadrature) {
    const auto g = unit_well();
    const double E_T = 5.0;
    const auto d = qens::well_ensemble_density(g, E_T, {0.0, 2.0});
    // Oracle: integrate the raw members over their k ranges with adaptive Kronrod.
    const double k_in = std::sqrt(E_T), k_out = std::sqrt(10.0 - E_T);
    const double w0 = gk(
        [&](double k1) {
            const double k2 = std::sqrt(10.0 - k1 * k1);
            const double v = raw_wave(raw_amplitude(1.0, k1, k2, 1.0), k1, k2, 1.0, 0.0);
            return v * v;
        },
        0.0, k_in);
    const double w2 = gk(
        [&](double k2) {
            const double k1 = std::sqrt(10.0 - k2 * k2);
            const double v = raw_wave(raw_amplitude(1.0, k1, k2, 1.0), k1, k2, 1.0, 2.0);
            return v * v;
        },
        0.0, k_out);
    EXPECT_NEAR((d.w[0] / d.w[1]) / (w0 / w2), 1.0, 1e-4);
}

// [lo, hi] with windows of width `width` removed around each cut, mirroring
// the principal-value skip of singular members.
double gk_skipping(const std::function<double(double)>& f, double lo, double hi, std::vector<double> cuts,
                   double width) {
    std::sort(cuts.begin(), cuts.end());
    double s = 0.0, a = lo;
    for (double c : cuts) {
        if (c + 0.5 * width <= lo || c - 0.5 * width >= hi) continue;
        if (c - 0.5 * width > a) s += gk(f, a, c - 0.5 * width);
        a = std::max(a, c + 0.5 * width);
    }
    if (a < hi) s += gk(f, a, hi);
    return s;
}

TEST(WellDensity, IntegratesToOne) {
    const auto g = unit_well();
    for (double E_T : {2.0, 5.0, 8.5}) {
        const auto d = qens::well_ensemble_density(g, E_T, {0.0});
        const double k_in = std::sqrt(E_T), k_out = std::sqrt(10.0 - E_T);
        std::vector<double> in_cuts, out_cuts;
        for (double z = kPi / 2.0; z < std::sqrt(10.0); z += kPi) {
            in_cuts.push_back(z);
            out_cuts.push_back(std::sqrt(10.0 - z * z));
        }
        // Nested oracle: inner x-integral numerically (exterior tail past X in closed form).
        const double X = 6.0;
        const double inside = gk_skipping(
            [&](double k1) {
                const double k2 = std::sqrt(10.0 - k1 * k1);
                const double a = raw_amplitude(1.0, k1, k2, 1.0);
                return gk([&](double x) { const double v = raw_wave(a, k1, k2, 1.0, x); return v * v; }, 0.0, 1.0);
            },
            0.0, k_in, in_cuts, 1e-6 * k_in);
        const double outside = gk_skipping(
            [&](double k2) {
                const double k1 = std::sqrt(10.0 - k2 * k2);
                const double a = raw_amplitude(1.0, k1, k2, 1.0);
                const double near = gk([&](double x) { const double v = raw_wave(a, k1, k2, 1.0, x); return v * v; }, 1.0, X);
                const double tail = k2 > 0.0 ? a * a * std::exp(-2.0 * k2 * X) / (2.0 * k2) : 0.0;
                return near + tail;
            },
            0.0, k_out, out_cuts, 1e-6 * k_out);
        EXPECT_NEAR(2.0 * (inside + outside) * d.rho_bar, 1.0, 1e-8) << "E_T=" << E_T;
    }
}

TEST(WellDensity, PairedVariantDiffersButStaysNormalized) {
    const auto g = unit_well();
    qens::WellDensityOptions paired;
    paired.paired = true;
    const auto a = qens::well_ensemble_density(g, 5.0, {0.0, 2.0});
    const auto b = qens::well_ensemble_density(g, 5.0, {0.0, 2.0}, paired);
    EXPECT_NE(a.w[1] / a.w[0], b.w[1] / b.w[0]);
    EXPECT_GT(b.rho_bar, 0.0);
}

TEST(WellDensity, RejectsUnboundEnergy) {
    const auto g = unit_well();
    EXPECT_THROW(qens::well_ensemble_density(g, 10.0, {0.0}), qens::unsupported_regime);
    EXPECT_THROW(qens::well_ensemble_density(g, 0.0, {0.0}), qens::unsupported_regime);
}

TEST(SampleMembers, SatisfyPairing) {
    const auto g = unit_well();
    for (const auto& m : qens::sample_members(g, 5.0, 17))
        EXPECT_NEAR(m.k1 * m.k1 + m.k2 * m.k2, 10.0, 1e-12);
}

}  // namespace
