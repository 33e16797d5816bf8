#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sensim/action.hpp"
#include "sensim/binning.hpp"
#include "sensim/policies.hpp"
#include "sensim/rate.hpp"

namespace sensim {

struct ExperimentConfig {
    std::string name = "experiment";
    RateFunction rate = RateFunction::unimodal();
    double cost = 10.0;
    std::uint32_t sensors = 1;
    std::uint64_t horizon = 1024;
    RebinSchedule schedule{ScheduleKind::CubeRoot, 4};
    std::uint32_t replications = 10;
    std::uint64_t seed = 12345;
    std::vector<PolicyConfig> policies;
};

// Expected reward r(A) = integral over A of (lambda - cost).
double expected_reward(const Action& action, const RateFunction& rate, double cost,
                       double tol = 1e-9);

// Optimal action over all unions of <= sensors intervals, approximated on a
// 2^16-bin grid with exact per-bin integrals; the reward gap to the true
// continuous optimum is at most 2 * cost * sensors / 2^16.
Action optimal_continuous_action(const RateFunction& rate, double cost,
                                 std::uint32_t sensors);

// Optimal bin-aligned action on the given mesh under exact bin weights.
Action optimal_discrete_action(const RateFunction& rate, double cost,
                               std::uint32_t sensors, const Mesh& mesh);

struct RoundRecord {
    std::uint64_t t = 0;
    std::uint32_t k_bins = 0;
    Action action;
    std::uint64_t events_detected = 0;
    double reward = 0.0;        // expected reward r(A_t)
    double inst_regret = 0.0;   // r(A*) - r(A_t)
    double disc_regret = 0.0;   // r(A*) - r(A*_t), discretisation part
    double round_regret = 0.0;  // r(A*_t) - r(A_t)
    double cum_regret = 0.0;
};

struct BinPosterior {
    double shape = 0.0;
    double rate = 0.0;
    double mean = 0.0;
    double lo95 = 0.0;
    double hi95 = 0.0;
};

// Decision-time state of the final round, for external posterior plots.
struct PosteriorSnapshot {
    std::uint64_t round = 0;
    std::uint32_t k_bins = 0;
    std::vector<BinPosterior> bins;
    std::vector<double> last_rates;
    Action action;
};

struct RunTrace {
    std::uint32_t run_id = 0;
    std::vector<RoundRecord> rounds;
    double k_lower = 0.0;  // min over t of K_t / t^{1/3}
    double k_upper = 0.0;  // max over t of K_t / t^{1/3}
    PosteriorSnapshot snapshot;
};

struct PolicyOutcome {
    PolicyConfig config;
    std::string name;
    std::vector<RunTrace> runs;
};

struct ExperimentResult {
    Action optimal_action;
    double optimal_reward = 0.0;
    std::vector<PolicyOutcome> policies;
};

// Runs every configured policy for the configured number of replications.
// Fully deterministic given (config, seed); replications run in parallel on
// independent random streams.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct BoundParams {
    double k_lower = 0.0;
    double k_upper = 0.0;
    double lambda_max = 0.0;
    double cost = 0.0;
    std::uint32_t sensors = 1;
    std::uint64_t horizon = 1;
};

// Regret ceiling 4 k_up (log(T+1) log T + 2 lmax) T^{1/3}
//             + (C U / k_lo + sqrt(24 k_up lmax log T)) T^{2/3}.
double theorem_bound(const BoundParams& params);

// Randomized cross-check of the iterative-merging optimizer against the
// exhaustive reference.
struct OracleCheckResult {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    double max_abs_gap = 0.0;
};

OracleCheckResult run_oracle_check(std::uint64_t instances, std::uint64_t seed);

// Paper-style experiment presets.
ExperimentConfig unimodal_experiment(ScheduleKind schedule, std::uint64_t seed);
ExperimentConfig bimodal_experiment(std::uint64_t seed);

}  // namespace sensim
