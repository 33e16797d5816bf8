#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sensim/action.hpp"
#include "sensim/binning.hpp"
#include "sensim/inference.hpp"
#include "sensim/random.hpp"

namespace sensim {

enum class PolicyKind { Thompson, Ucb, MUcb, EpsGreedy };

struct PolicyConfig {
    PolicyKind kind = PolicyKind::Thompson;
    PriorParams prior{0.5, 0.5, 1.0};   // Thompson posterior / eps-greedy explore draws
    double epsilon = 0.01;              // eps-greedy only
    double lambda_max_policy = 1.0;     // UCB only
};

std::string_view policy_kind_name(PolicyKind kind);

// One Thompson sampling round: draw each bin's rate from its truncated-Gamma
// posterior and play the optimal action for the draw. Needs no
// initialization round.
Action ts_step(const BinStats& stats, const Mesh& mesh, const PriorParams& prior,
               double cost, std::uint32_t sensors, RandomStream& rng,
               std::vector<double>* sampled_rates = nullptr);

// UCB with optimistic indices mean + 2log(t)/(wN) + sqrt(6 lmax log(t)/(wN));
// plays [0, 1] at t = 1 so every bin has N >= 1 afterwards.
Action ucb_step(const BinStats& stats, const Mesh& mesh, std::uint64_t t,
                double lambda_max, double cost, std::uint32_t sensors,
                std::vector<double>* indices = nullptr);

// Modified UCB: the empirical mean replaces lambda_max under the root.
Action mucb_step(const BinStats& stats, const Mesh& mesh, std::uint64_t t, double cost,
                 std::uint32_t sensors, std::vector<double>* indices = nullptr);

// Greedy on empirical means; with probability epsilon the rates are drawn
// from the untruncated Gamma(alpha, beta) prior instead. Plays [0, 1] at t = 1.
Action epsgreedy_step(const BinStats& stats, const Mesh& mesh, std::uint64_t t,
                      const PriorParams& prior, double epsilon, double cost,
                      std::uint32_t sensors, RandomStream& rng,
                      std::vector<double>* rates = nullptr);

// Dispatch wrapper used by the experiment harness.
class Policy {
public:
    Policy(PolicyConfig config, double cost, std::uint32_t sensors);

    Action step(const BinStats& stats, const Mesh& mesh, std::uint64_t t,
                RandomStream& rng);

    // Rates or indices that produced the most recent action.
    const std::vector<double>& last_rates() const { return last_rates_; }
    std::string_view name() const { return policy_kind_name(config_.kind); }
    const PolicyConfig& config() const { return config_; }

private:
    PolicyConfig config_;
    double cost_;
    std::uint32_t sensors_;
    std::vector<double> last_rates_;
};

}  // namespace sensim
