#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qens/constants.hpp"
#include "qens/error.hpp"

namespace {

TEST(Constants, ElectronVolumeFromHydrogenRadius) {
    const auto c = qens::derived_constants(3.3e-10);
    EXPECT_NEAR(c.v_electron, 2.26e-28, 0.01e-28);
    EXPECT_DOUBLE_EQ(c.v_electron, 2.0 * std::numbers::pi * std::pow(3.3e-10, 3));
}

TEST(Constants, BetaElMatchesPrintedValue) {
    const auto c = qens::derived_constants(3.3e-10);
    EXPECT_NEAR(c.beta_el, 4.67e-7, 0.01e-7);
    EXPECT_DOUBLE_EQ(c.beta_el, c.hbar / c.v_electron);
}

TEST(Constants, UnitVolumeRadius) {
    const auto c = qens::derived_constants(std::pow(2.0 * std::numbers::pi, -1.0 / 3.0));
    EXPECT_NEAR(c.v_electron, 1.0, 1e-15);
}

TEST(Constants, AllPositive) {
    const auto c = qens::derived_constants();
    EXPECT_GT(c.hbar, 0.0);
    EXPECT_GT(c.m_electron, 0.0);
    EXPECT_GT(c.r_hydrogen, 0.0);
    EXPECT_GT(c.v_electron, 0.0);
    EXPECT_GT(c.beta_el, 0.0);
}

TEST(Constants, RejectsNonPositiveRadius) {
    EXPECT_THROW(qens::derived_constants(0.0), qens::domain_error);
    EXPECT_THROW(qens::derived_constants(-1e-10), qens::domain_error);
}

TEST(Constants, Deterministic) {
    const auto a = qens::derived_constants(1.7e-10);
    const auto b = qens::derived_constants(1.7e-10);
    EXPECT_EQ(a.beta_el, b.beta_el);
    EXPECT_EQ(a.v_electron, b.v_electron);
}

TEST(NormIntegralCoefficient, ElectronWithinOnePercent) {
    const double alpha = qens::norm_integral_coefficient(qens::si::electron_mass);
    EXPECT_NEAR(alpha / 2.46e-18, 1.0, 0.01);
}

TEST(NormIntegralCoefficient, UnitInversion) {
    const double hb = qens::si::hbar;
    const double m = std::pow(3.0 * hb * hb * hb / (4.0 * std::numbers::pi), 0.25);
    EXPECT_NEAR(qens::norm_integral_coefficient(m), 1.0, 1e-12);
}

TEST(NormIntegralCoefficient, VanishesQuarticallyAtSmallMass) {
    const double a1 = qens::norm_integral_coefficient(1e-40);
    const double a2 = qens::norm_integral_coefficient(2e-40);
    EXPECT_NEAR(a2 / a1, 16.0, 1e-10);
    EXPECT_LT(qens::norm_integral_coefficient(1e-60), 1e-130);
}

TEST(NormIntegralCoefficient, RejectsNonPositiveMass) {
    EXPECT_THROW(qens::norm_integral_coefficient(0.0), qens::domain_error);
}

}  // namespace
