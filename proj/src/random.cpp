#include "sensim/random.hpp"

#include <stdexcept>

namespace sensim {

RandomStream::RandomStream(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    engine_.seed(seq);
}

RandomStream RandomStream::derive(std::uint64_t master_seed, std::uint64_t stream_id) {
    RandomStream s(0);
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    s.engine_.seed(seq);
    return s;
}

double RandomStream::uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomStream::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RandomStream::gamma(double shape, double rate) {
    if (shape <= 0.0 || rate <= 0.0)
        throw std::invalid_argument("gamma: shape and rate must be positive");
    return std::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
}

std::uint64_t RandomStream::poisson(double mean) {
    if (mean < 0.0) throw std::invalid_argument("poisson: negative mean");
    if (mean == 0.0) return 0;
    return std::poisson_distribution<std::uint64_t>(mean)(engine_);
}

bool RandomStream::bernoulli(double p) {
    return uniform() < p;
}

}  // namespace sensim
