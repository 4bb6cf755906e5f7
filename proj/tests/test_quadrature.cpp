#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qens/grid.hpp"
#include "qens/quadrature.hpp"
#include "qens/random.hpp"

namespace {

TEST(GaussLegendre, WeightsSumToTwo) {
    for (std::size_t n : {1u, 2u, 7u, 32u, 64u, 257u}) {
        const auto& r = qens::gauss_legendre(n);
        ASSERT_EQ(r.nodes.size(), n);
        double s = 0.0;
        for (double w : r.weights) s += w;
        EXPECT_NEAR(s, 2.0, 1e-13) << "order " << n;
    }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
    const std::size_t n = 8;
    for (int p = 0; p <= 15; ++p) {
        const double got = qens::integrate_gl([p](double x) { return std::pow(x, p); }, 0.0, 1.0, n);
        EXPECT_NEAR(got, 1.0 / (p + 1), 1e-14) << "degree " << p;
    }
}

TEST(GaussLegendre, ComplexIntegrand) {
    const auto got = qens::integrate_gl([](double x) { return std::polar(1.0, x); }, 0.0, std::numbers::pi, 32);
    EXPECT_NEAR(got.real(), 0.0, 1e-14);
    EXPECT_NEAR(got.imag(), 2.0, 1e-14);
}

TEST(GaussLegendre, AdaptiveOrderOscillatory) {
    const double got =
        qens::integrate_adaptive_order([](double x) { return std::cos(200.0 * x); }, 0.0, 1.0, 16, 1e-12);
    EXPECT_NEAR(got, std::sin(200.0) / 200.0, 1e-12);
}

TEST(Grid, GradientSecondOrder) {
    auto err = [](std::size_t n) {
        const auto x = qens::linspace(0.0, 1.0, n);
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(3.0 * x[i]);
        const auto d = qens::gradient(f, x[1] - x[0]);
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(d[i] - 3.0 * std::cos(3.0 * x[i])));
        return e;
    };
    EXPECT_GT(err(101) / err(201), 3.8);
}

TEST(CounterRng, ReproducibleAndUniform) {
    const qens::CounterRng a(42), b(42), c(43);
    double mean = 0.0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const double u = a.uniform(i);
        ASSERT_EQ(u, b.uniform(i));
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        mean += u;
    }
    EXPECT_NEAR(mean / 100000.0, 0.5, 0.005);
    EXPECT_NE(a.bits(0), c.bits(0));
}

}  // namespace
