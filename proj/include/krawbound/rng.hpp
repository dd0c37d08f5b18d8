#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace krawbound {

/// Counter-based generator: every draw is a pure function of (key, counter),
/// so streams can be split and replayed without shared state.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed = 0) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    /// Independent child stream for a sub-task identifier.
    CounterRng split(std::uint64_t stream) const {
        CounterRng c;
        c.key_ = mix(key_ ^ mix(stream + 0x9e3779b97f4a7c15ULL));
        return c;
    }

    std::uint64_t bits_at(std::uint64_t counter) const { return mix(key_ + mix(counter)); }

    /// Uniform in (0, 1).
    double uniform_at(std::uint64_t counter) const {
        return (static_cast<double>(bits_at(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal by Box-Muller over counters 2c and 2c+1.
    double normal_at(std::uint64_t counter) const {
        const double u1 = uniform_at(2 * counter);
        const double u2 = uniform_at(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // UniformRandomBitGenerator interface over an internal counter.
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return bits_at(counter_++); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace krawbound
