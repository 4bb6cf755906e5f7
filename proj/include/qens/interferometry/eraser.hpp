#ifndef QENS_INTERFEROMETRY_ERASER_HPP
#define QENS_INTERFEROMETRY_ERASER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>

#include "qens/error.hpp"

namespace qens {

enum class EraserStage { baseline, rotator_in_path1, rotator_plus_diagonal };

struct EraserConfig {
    EraserStage stage = EraserStage::baseline;
    double phase = 0.0;           // relative phase of path 2 (rad)
    double base_intensity = 1.0;  // |E1|^2 / c^2 + |B1|^2

    void validate() const { detail::require(base_intensity > 0.0, "EraserConfig: base intensity must be positive"); }
};

/// Closed-form phi_em after recombination:
///   baseline               base (1 + cos phi) / 2
///   rotator in path 1      base
///   rotator + diagonal     base (1 + cos phi) / 4
inline double eraser_intensity(const EraserConfig& c) {
    c.validate();
    switch (c.stage) {
        case EraserStage::baseline: return 0.5 * c.base_intensity * (1.0 + std::cos(c.phase));
        case EraserStage::rotator_in_path1: return c.base_intensity;
        case EraserStage::rotator_plus_diagonal: return 0.25 * c.base_intensity * (1.0 + std::cos(c.phase));
    }
    return 0.0;
}

using CVec3 = std::array<std::complex<double>, 3>;

struct EraserFields {
    CVec3 E{};
    CVec3 B{};
};

/// Builds the recombined complex E and B vectors for a beam along z split
/// into two paths (E along x, B along y), path 2 carrying e^{i phi}. The
/// rotator turns path 1 to E along y, B along -x; the diagonal polarizer
/// projects E onto (x + y)/sqrt(2) and B onto z cross that axis.
inline EraserFields eraser_fields(EraserStage stage, double phase, std::complex<double> E1, std::complex<double> B1) {
    using C = std::complex<double>;
    const double r = 1.0 / std::numbers::sqrt2;
    const C E2 = E1 * std::polar(1.0, phase);
    const C B2 = B1 * std::polar(1.0, phase);
    EraserFields f;
    if (stage == EraserStage::baseline) {
        f.E = {r * (E1 + E2), C{}, C{}};
        f.B = {C{}, r * (B1 + B2), C{}};
        return f;
    }
    f.E = {r * E2, r * E1, C{}};
    f.B = {-r * B1, r * B2, C{}};
    if (stage == EraserStage::rotator_in_path1) return f;

    const std::array<double, 3> e_axis{r, r, 0.0};
    const std::array<double, 3> b_axis{-r, r, 0.0};  // z x e_axis
    auto project = [](const CVec3& v, const std::array<double, 3>& a) {
        const C s = v[0] * a[0] + v[1] * a[1] + v[2] * a[2];
        return CVec3{s * a[0], s * a[1], s * a[2]};
    };
    f.E = project(f.E, e_axis);
    f.B = project(f.B, b_axis);
    return f;
}

/// (|E|^2 / c^2 + |B|^2) / 2.
inline double em_intensity(const EraserFields& f, double c) {
    double e2 = 0.0, b2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        e2 += std::norm(f.E[i]);
        b2 += std::norm(f.B[i]);
    }
    return 0.5 * (e2 / (c * c) + b2);
}

/// (max - min) / (max + min) of intensity(phi) over n phases in [0, 2 pi), n even
/// so that phi = pi is sampled.
inline double phase_contrast(const std::function<double(double)>& intensity, std::size_t n = 360) {
    detail::require(n >= 2 && n % 2 == 0, "phase_contrast: need an even number of samples");
    double mx = -std::numeric_limits<double>::infinity(), mn = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = intensity(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    return (mx + mn) > 0.0 ? (mx - mn) / (mx + mn) : 0.0;
}

}  // namespace qens

#endif
