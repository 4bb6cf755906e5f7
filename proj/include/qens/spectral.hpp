#ifndef QENS_SPECTRAL_HPP
#define QENS_SPECTRAL_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <numbers>
#include <vector>

#include <fftw3.h>

#include "qens/error.hpp"

namespace qens {

namespace detail {
// FFTW planning is not thread safe.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

/// Owning pair of 1D complex FFTW plans of a fixed size.
class Fft1D {
public:
    explicit Fft1D(std::size_t n) : n_(n) {
        detail::require(n >= 2, "Fft1D: size must be >= 2");
        buffer_ = fftw_alloc_complex(n);
        std::lock_guard lock(detail::fftw_planner_mutex());
        forward_ = fftw_plan_dft_1d(static_cast<int>(n), buffer_, buffer_, FFTW_FORWARD, FFTW_ESTIMATE);
        backward_ = fftw_plan_dft_1d(static_cast<int>(n), buffer_, buffer_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft1D() {
        std::lock_guard lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(backward_);
        fftw_free(buffer_);
    }
    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    std::size_t size() const { return n_; }

    /// Unnormalized forward transform in place.
    void forward(std::vector<std::complex<double>>& v) const { run(forward_, v); }
    /// Backward transform scaled by 1/n, so backward(forward(v)) == v.
    void backward(std::vector<std::complex<double>>& v) const {
        run(backward_, v);
        const double s = 1.0 / static_cast<double>(n_);
        for (auto& z : v) z *= s;
    }

private:
    void run(fftw_plan plan, std::vector<std::complex<double>>& v) const {
        detail::require(v.size() == n_, "Fft1D: size mismatch");
        auto* raw = reinterpret_cast<fftw_complex*>(v.data());
        fftw_execute_dft(plan, raw, raw);
    }

    std::size_t n_;
    fftw_complex* buffer_ = nullptr;
    fftw_plan forward_ = nullptr;
    fftw_plan backward_ = nullptr;
};

/// Angular wave numbers of the FFT bins for a periodic box of length L.
inline std::vector<double> fft_wave_numbers(std::size_t n, double length) {
    std::vector<double> k(n);
    const double dk = 2.0 * std::numbers::pi / length;
    for (std::size_t i = 0; i < n; ++i) {
        const auto signed_i = i <= n / 2 ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(n);
        k[i] = dk * signed_i;
    }
    return k;
}

/// Spectral Laplacian on a periodic grid.
class SpectralLaplacian {
public:
    SpectralLaplacian(std::size_t n, double length) : fft_(n), k2_(fft_wave_numbers(n, length)) {
        for (auto& k : k2_) k = k * k;
    }

    std::vector<std::complex<double>> operator()(const std::vector<std::complex<double>>& f) const {
        auto v = f;
        fft_.forward(v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= -k2_[i];
        fft_.backward(v);
        return v;
    }

    double max_k2() const {
        double m = 0.0;
        for (double v : k2_) m = std::max(m, v);
        return m;
    }

private:
    Fft1D fft_;
    std::vector<double> k2_;
};

}  // namespace qens

#endif
