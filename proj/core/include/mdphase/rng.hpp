#pragma once

#include <complex>
#include <cstdint>

namespace mdphase {

/**
 * Deterministic random stream: splitmix64-seeded xoshiro-style generator with
 * hand-rolled uniform/Gaussian draws, so identical seeds reproduce identical
 * doubles on every platform. Per-trial streams derive from (seed, index),
 * which keeps Monte-Carlo runs reproducible under any execution order.
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    static RngStream for_trial(std::uint64_t seed, std::uint64_t trial_index);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform01();
    /// Uniform in [a, b).
    double uniform(double a, double b);
    /// Inclusive integer range.
    int uniform_int(int a, int b);
    /// Standard normal (Box-Muller).
    double gaussian();
    std::complex<double> complex_gaussian();

private:
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace mdphase
