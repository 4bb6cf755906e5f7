#ifndef QENS_RANDOM_HPP
#define QENS_RANDOM_HPP

#include <cstdint>

namespace qens {

// Counter-based generator: the k-th draw of a stream is a pure function of
// (seed, k), so any partition of the draws across threads reproduces the
// same sequence. Mixing function is SplitMix64's finalizer.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

    std::uint64_t bits(std::uint64_t counter) const { return mix(key_ + 0x9e3779b97f4a7c15ULL * (counter + 1)); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const { return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t key_;
};

}  // namespace qens

#endif
