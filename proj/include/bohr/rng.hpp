#pragma once
#include <cstdint>

#include "bohr/common.hpp"

namespace bohr {

// splitmix64 stream. Self-contained so sampled values are bit-identical across
// platforms and standard-library versions; every randomized routine in this
// project draws from it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Area-uniform in the closed disk of the given radius.
    Complex next_in_disk(double radius = 1.0) {
        double r = radius * std::sqrt(next_double());
        double t = 2.0 * 3.14159265358979323846 * next_double();
        return {r * std::cos(t), r * std::sin(t)};
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Per-trial sub-seed: trials can run in any order (or concurrently) and still
// reproduce the serial stream exactly.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 g(base ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return g.next();
}

}  // namespace bohr
