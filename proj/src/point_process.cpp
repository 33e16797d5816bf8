#include "sensim/point_process.hpp"

#include <algorithm>
#include <cmath>

namespace sensim {

EventBatch simulate_round(const RateFunction& rate, const Action& action,
                          std::uint64_t round, RandomStream& rng) {
    EventBatch batch;
    batch.round = round;

    const double sup = rate.sup_bound();
    const double length = action.total_length();
    if (sup <= 0.0 || length <= 0.0) return batch;

    const auto& ivs = action.intervals();
    const std::uint64_t proposals = rng.poisson(sup * length);
    batch.locations.reserve(proposals);
    for (std::uint64_t i = 0; i < proposals; ++i) {
        // uniform position over the union, then thin by lambda(x)/sup
        double offset = rng.uniform() * length;
        std::size_t j = 0;
        for (; j + 1 < ivs.size() && offset >= ivs[j].length(); ++j)
            offset -= ivs[j].length();
        double x = ivs[j].lo + offset;
        if (x >= ivs[j].hi)  // rounding guard: keep x inside [lo, hi)
            x = std::nextafter(ivs[j].hi, ivs[j].lo);
        if (rng.uniform() < rate(x) / sup) batch.locations.push_back(x);
    }
    std::sort(batch.locations.begin(), batch.locations.end());
    return batch;
}

}  // namespace sensim
