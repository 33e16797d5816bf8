#pragma once

#include <cstdint>
#include <vector>

#include "sensim/action.hpp"
#include "sensim/random.hpp"
#include "sensim/rate.hpp"

namespace sensim {

// Events detected in one round, restricted to the sensed action.
struct EventBatch {
    std::uint64_t round = 0;
    std::vector<double> locations;  // sorted ascending
};

// Draws one round of the inhomogeneous Poisson process restricted to the
// sensed action, by thinning a homogeneous process at rate sup_bound.
// The detected count over A is Poisson(integral of lambda over A).
EventBatch simulate_round(const RateFunction& rate, const Action& action,
                          std::uint64_t round, RandomStream& rng);

}  // namespace sensim
