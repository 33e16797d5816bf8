#include "sensim/policies.hpp"

#include <stdexcept>

#include "sensim/asim.hpp"

namespace sensim {

std::string_view policy_kind_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::Thompson: return "thompson";
        case PolicyKind::Ucb: return "ucb";
        case PolicyKind::MUcb: return "mucb";
        case PolicyKind::EpsGreedy: return "epsgreedy";
    }
    return "unknown";
}

Action ts_step(const BinStats& stats, const Mesh& mesh, const PriorParams& prior,
               double cost, std::uint32_t sensors, RandomStream& rng,
               std::vector<double>* sampled_rates) {
    std::vector<double> rates(mesh.bins);
    const double width = mesh.width();
    for (std::uint32_t k = 0; k < mesh.bins; ++k)
        rates[k] = sample_tg(posterior_for_bin(prior, stats.events[k], stats.sensed[k], width),
                             rng);
    if (sampled_rates) *sampled_rates = rates;
    return asim_select(rates, cost, sensors, mesh);
}

Action ucb_step(const BinStats& stats, const Mesh& mesh, std::uint64_t t,
                double lambda_max, double cost, std::uint32_t sensors,
                std::vector<double>* indices) {
    if (t == 1) {
        if (indices) indices->clear();
        return Action::full();
    }
    std::vector<double> idx(mesh.bins);
    const double width = mesh.width();
    for (std::uint32_t k = 0; k < mesh.bins; ++k)
        idx[k] = empirical_mean(stats.events[k], stats.sensed[k], width) +
                 confidence_radius(t, stats.sensed[k], width, lambda_max);
    if (indices) *indices = idx;
    return asim_select(idx, cost, sensors, mesh);
}

Action mucb_step(const BinStats& stats, const Mesh& mesh, std::uint64_t t, double cost,
                 std::uint32_t sensors, std::vector<double>* indices) {
    if (t == 1) {
        if (indices) indices->clear();
        return Action::full();
    }
    std::vector<double> idx(mesh.bins);
    const double width = mesh.width();
    for (std::uint32_t k = 0; k < mesh.bins; ++k) {
        const double mean = empirical_mean(stats.events[k], stats.sensed[k], width);
        idx[k] = mean + confidence_radius(t, stats.sensed[k], width, mean);
    }
    if (indices) *indices = idx;
    return asim_select(idx, cost, sensors, mesh);
}

Action epsgreedy_step(const BinStats& stats, const Mesh& mesh, std::uint64_t t,
                      const PriorParams& prior, double epsilon, double cost,
                      std::uint32_t sensors, RandomStream& rng,
                      std::vector<double>* rates_out) {
    if (!(0.0 <= epsilon && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    if (t == 1) {
        if (rates_out) rates_out->clear();
        return Action::full();
    }
    std::vector<double> rates(mesh.bins);
    const double width = mesh.width();
    if (rng.bernoulli(epsilon)) {
        // explore: fresh untruncated prior draws, independent per bin
        for (std::uint32_t k = 0; k < mesh.bins; ++k)
            rates[k] = rng.gamma(prior.alpha, prior.beta);
    } else {
        for (std::uint32_t k = 0; k < mesh.bins; ++k)
            rates[k] = empirical_mean(stats.events[k], stats.sensed[k], width);
    }
    if (rates_out) *rates_out = rates;
    return asim_select(rates, cost, sensors, mesh);
}

Policy::Policy(PolicyConfig config, double cost, std::uint32_t sensors)
    : config_(config), cost_(cost), sensors_(sensors) {
    if (sensors_ == 0) throw std::invalid_argument("policy needs at least one sensor");
}

Action Policy::step(const BinStats& stats, const Mesh& mesh, std::uint64_t t,
                    RandomStream& rng) {
    switch (config_.kind) {
        case PolicyKind::Thompson:
            return ts_step(stats, mesh, config_.prior, cost_, sensors_, rng, &last_rates_);
        case PolicyKind::Ucb:
            return ucb_step(stats, mesh, t, config_.lambda_max_policy, cost_, sensors_,
                            &last_rates_);
        case PolicyKind::MUcb:
            return mucb_step(stats, mesh, t, cost_, sensors_, &last_rates_);
        case PolicyKind::EpsGreedy:
            return epsgreedy_step(stats, mesh, t, config_.prior, config_.epsilon, cost_,
                                  sensors_, rng, &last_rates_);
    }
    throw std::logic_error("unreachable policy kind");
}

}  // namespace sensim
