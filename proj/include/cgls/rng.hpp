#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cgls {

// Counter-based RNG: out = mix(seed, stream, counter). Stateless apart from
// the (seed, stream, counter) triple, so any draw can be reproduced from its
// coordinates and counter ranges can be partitioned across workers without
// coordination. The mixer is the SplitMix64 finalizer (Stafford mix13),
// applied to a distinct 64-bit lattice point per (stream, counter) pair.

struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t counter = 0;

    friend bool operator==(const RngState&, const RngState&) = default;
};

namespace detail {

constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(detail::mix64(seed ^ detail::mix64(stream * detail::golden_gamma + 1))) {}

    explicit CounterRng(const RngState& s) : CounterRng(s.seed, s.stream) {}

    // Raw 64-bit word at a counter.
    std::uint64_t bits(std::uint64_t counter) const {
        return detail::mix64(key_ + counter * detail::golden_gamma);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). n must be > 0. Uses the 64->n multiply-shift
    // reduction; the modulo bias at n << 2^64 is far below anything our
    // statistical tests can see.
    std::uint64_t below(std::uint64_t counter, std::uint64_t n) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(bits(counter)) * n) >> 64);
    }

    // Standard normal via Box-Muller; consumes counters c and c+1.
    double normal(std::uint64_t counter) const {
        // u1 in (0, 1] so the log is finite.
        double u1 = static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
        double u2 = uniform(counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t key_;
};

// Named streams so independent consumers of one master seed never collide.
namespace rng_stream {
constexpr std::uint64_t model_init = 0x01;
constexpr std::uint64_t growth = 0x02;
constexpr std::uint64_t sampler = 0x03;
constexpr std::uint64_t synth = 0x04;
constexpr std::uint64_t split = 0x05;
constexpr std::uint64_t classifier = 0x06;
}  // namespace rng_stream

}  // namespace cgls
