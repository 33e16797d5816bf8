#pragma once

#include <cstdint>
#include <random>

namespace sensim {

// Deterministic random stream. One stream per replication; streams derived
// from a master seed and a stream id are statistically independent and do
// not depend on scheduling order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    static RandomStream derive(std::uint64_t master_seed, std::uint64_t stream_id);

    // Uniform on [0, 1).
    double uniform();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Gamma with given shape and rate (inverse scale).
    double gamma(double shape, double rate);

    // Poisson with the given mean; mean 0 yields 0.
    std::uint64_t poisson(double mean);

    bool bernoulli(double p);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace sensim
