#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sensim/action.hpp"
#include "sensim/binning.hpp"

namespace sensim {

// Maximal run of same-signed bins; bin range is inclusive. Zero-weight bins
// join the preceding run's sign (positive when there is none), so runs
// alternate in sign class.
struct WeightedInterval {
    std::uint32_t lo_bin = 0;
    std::uint32_t hi_bin = 0;
    double weight = 0.0;
};

struct AsimDiagnostics {
    std::size_t initial_intervals = 0;
    std::size_t merges = 0;
    std::size_t drops = 0;  // weakest end intervals discarded during the loop
    bool alternation_ok = true;
};

// Groups per-bin weights into the alternating-sign candidate intervals.
std::vector<WeightedInterval> build_initial_intervals(std::span<const double> bin_weights);

// Optimal action for piecewise-constant rates: maximizes the summed interval
// weight over unions of at most `sensors` disjoint bin-aligned intervals by
// iteratively merging the smallest-|weight| interior interval with both
// neighbours. Runs in O(K log K); at most N merges for N initial intervals.
Action asim_select(std::span<const double> bin_rates, double cost, std::uint32_t sensors,
                   const Mesh& mesh, AsimDiagnostics* diag = nullptr);

// Same optimizer on raw per-bin weights.
Action asim_select_weights(std::span<const double> bin_weights, std::uint32_t sensors,
                           const Mesh& mesh, AsimDiagnostics* diag = nullptr);

// Exhaustive reference: enumerates every subset of bins forming at most
// `sensors` disjoint runs. Guarded to K <= 20 bins. Ties break toward fewer
// bins, then lexicographically smallest bin sequence.
Action brute_force_select(std::span<const double> bin_weights, std::uint32_t sensors,
                          const Mesh& mesh);

// Total weight of a bin-aligned action under the given per-bin weights.
double action_weight(const Action& action, std::span<const double> bin_weights,
                     const Mesh& mesh);

}  // namespace sensim
