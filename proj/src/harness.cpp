#include "sensim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "sensim/asim.hpp"
#include "sensim/inference.hpp"
#include "sensim/point_process.hpp"

namespace sensim {
namespace {

constexpr std::uint32_t kFineGrid = 1u << 16;

// Exact per-bin integrals and the discrete-optimal reward for one mesh
// resolution; shared by every round played on that mesh.
struct MeshWeights {
    std::vector<double> bin_integral;   // integral of lambda over bin k
    std::vector<double> bin_weight;     // bin_integral - cost * width
    double optimal_reward = 0.0;
    Action optimal_action;
};

MeshWeights compute_mesh_weights(const RateFunction& rate, double cost,
                                 std::uint32_t sensors, std::uint32_t bins) {
    const Mesh mesh(bins);
    MeshWeights w;
    w.bin_integral.resize(bins);
    w.bin_weight.resize(bins);
    const double width = mesh.width();
    const double tol = std::max(1e-15, 1e-10 * width);
    for (std::uint32_t k = 0; k < bins; ++k) {
        const auto [lo, hi] = bin_interval(mesh, k);
        w.bin_integral[k] = rate.integrate(lo, hi, tol);
        w.bin_weight[k] = w.bin_integral[k] - cost * width;
    }
    w.optimal_action = asim_select_weights(w.bin_weight, sensors, mesh);
    w.optimal_reward = action_weight(w.optimal_action, w.bin_weight, mesh);
    return w;
}

class MeshWeightCache {
public:
    MeshWeightCache(const RateFunction& rate, double cost, std::uint32_t sensors)
        : rate_(rate), cost_(cost), sensors_(sensors) {}

    const MeshWeights& get(std::uint32_t bins) {
        auto it = cache_.find(bins);
        if (it == cache_.end())
            it = cache_.emplace(bins, compute_mesh_weights(rate_, cost_, sensors_, bins)).first;
        return it->second;
    }

private:
    const RateFunction& rate_;
    double cost_;
    std::uint32_t sensors_;
    std::map<std::uint32_t, MeshWeights> cache_;
};

double reward_from_weights(const Action& action, const MeshWeights& weights,
                           const Mesh& mesh) {
    return action_weight(action, weights.bin_weight, mesh);
}

PosteriorSnapshot take_snapshot(const BinStats& stats, const Mesh& mesh,
                                const PriorParams& prior, std::uint64_t t,
                                const std::vector<double>& last_rates,
                                const Action& action) {
    PosteriorSnapshot snap;
    snap.round = t;
    snap.k_bins = mesh.bins;
    snap.last_rates = last_rates;
    snap.action = action;
    snap.bins.resize(mesh.bins);
    const double width = mesh.width();
    for (std::uint32_t k = 0; k < mesh.bins; ++k) {
        const TGPosterior post =
            posterior_for_bin(prior, stats.events[k], stats.sensed[k], width);
        snap.bins[k] = {post.shape, post.rate, tg_mean(post), tg_quantile(post, 0.025),
                        tg_quantile(post, 0.975)};
    }
    return snap;
}

RunTrace run_single(const ExperimentConfig& cfg, const PolicyConfig& pcfg,
                    std::uint32_t run_id, std::uint64_t stream_id,
                    double optimal_reward) {
    RandomStream rng = RandomStream::derive(cfg.seed, stream_id);
    Policy policy(pcfg, cfg.cost, cfg.sensors);
    BinTracker tracker(cfg.schedule);
    MeshWeightCache cache(cfg.rate, cfg.cost, cfg.sensors);

    RunTrace trace;
    trace.run_id = run_id;
    trace.rounds.reserve(cfg.horizon);
    trace.k_lower = std::numeric_limits<double>::infinity();
    trace.k_upper = 0.0;

    double cum = 0.0;
    for (std::uint64_t t = 1; t <= cfg.horizon; ++t) {
        const Mesh mesh = tracker.mesh();
        const MeshWeights& weights = cache.get(mesh.bins);

        const Action action = policy.step(tracker.stats(), mesh, t, rng);
        if (t == cfg.horizon)
            trace.snapshot = take_snapshot(tracker.stats(), mesh, pcfg.prior, t,
                                           policy.last_rates(), action);

        EventBatch batch = simulate_round(cfg.rate, action, t, rng);

        RoundRecord rec;
        rec.t = t;
        rec.k_bins = mesh.bins;
        rec.action = action;
        rec.events_detected = batch.locations.size();
        rec.reward = reward_from_weights(action, weights, mesh);
        rec.inst_regret = optimal_reward - rec.reward;
        rec.disc_regret = optimal_reward - weights.optimal_reward;
        rec.round_regret = weights.optimal_reward - rec.reward;
        cum += rec.inst_regret;
        rec.cum_regret = cum;
        trace.rounds.push_back(std::move(rec));

        const double ratio = mesh.bins / std::cbrt(static_cast<double>(t));
        trace.k_lower = std::min(trace.k_lower, ratio);
        trace.k_upper = std::max(trace.k_upper, ratio);

        tracker.observe(t, action, std::move(batch.locations));
        tracker.end_of_round(t);
    }
    return trace;
}

}  // namespace

double expected_reward(const Action& action, const RateFunction& rate, double cost,
                       double tol) {
    double total = 0.0;
    for (const auto& iv : action.intervals())
        total += rate.integrate(iv.lo, iv.hi, tol) - cost * iv.length();
    return total;
}

Action optimal_continuous_action(const RateFunction& rate, double cost,
                                 std::uint32_t sensors) {
    return compute_mesh_weights(rate, cost, sensors, kFineGrid).optimal_action;
}

Action optimal_discrete_action(const RateFunction& rate, double cost,
                               std::uint32_t sensors, const Mesh& mesh) {
    return compute_mesh_weights(rate, cost, sensors, mesh.bins).optimal_action;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (config.replications < 1)
        throw std::invalid_argument("need at least one replication");
    if (config.policies.empty())
        throw std::invalid_argument("need at least one policy");

    ExperimentResult result;
    const MeshWeights fine =
        compute_mesh_weights(config.rate, config.cost, config.sensors, kFineGrid);
    result.optimal_action = fine.optimal_action;
    result.optimal_reward = fine.optimal_reward;

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t p = 0; p < config.policies.size(); ++p) {
        PolicyOutcome outcome;
        outcome.config = config.policies[p];
        outcome.name = std::string(policy_kind_name(outcome.config.kind));
        outcome.runs.resize(config.replications);

        std::vector<std::future<RunTrace>> jobs;
        jobs.reserve(config.replications);
        for (std::uint32_t r = 0; r < config.replications; ++r) {
            const std::uint64_t stream_id =
                static_cast<std::uint64_t>(p) * config.replications + r;
            jobs.push_back(std::async(
                workers > 1 ? std::launch::async : std::launch::deferred,
                [&config, pcfg = outcome.config, r, stream_id,
                 opt = result.optimal_reward] {
                    return run_single(config, pcfg, r, stream_id, opt);
                }));
        }
        for (std::uint32_t r = 0; r < config.replications; ++r)
            outcome.runs[r] = jobs[r].get();
        result.policies.push_back(std::move(outcome));
    }
    return result;
}

double theorem_bound(const BoundParams& params) {
    if (params.k_lower <= 0.0 || params.k_upper <= 0.0)
        throw std::invalid_argument("schedule constants must be positive");
    const auto T = static_cast<double>(params.horizon);
    const double logT = std::log(T);
    const double t13 = std::cbrt(T);
    const double t23 = t13 * t13;
    return 4.0 * params.k_upper * (std::log(T + 1.0) * logT + 2.0 * params.lambda_max) * t13 +
           (params.cost * params.sensors / params.k_lower +
            std::sqrt(24.0 * params.k_upper * params.lambda_max * logT)) *
               t23;
}

OracleCheckResult run_oracle_check(std::uint64_t instances, std::uint64_t seed) {
    RandomStream rng(seed);
    OracleCheckResult res;
    res.instances = instances;
    for (std::uint64_t i = 0; i < instances; ++i) {
        const auto bins = static_cast<std::uint32_t>(2 + rng.engine()() % 11);  // 2..12
        const auto sensors = static_cast<std::uint32_t>(1 + rng.engine()() % 3);
        std::vector<double> weights(bins);
        for (auto& w : weights) w = rng.uniform(-1.0, 1.0);
        const Mesh mesh(bins);
        const Action fast = asim_select_weights(weights, sensors, mesh);
        const Action slow = brute_force_select(weights, sensors, mesh);
        const double gap = std::abs(action_weight(fast, weights, mesh) -
                                    action_weight(slow, weights, mesh));
        res.max_abs_gap = std::max(res.max_abs_gap, gap);
        if (gap > 1e-12) res.failures += 1;
    }
    return res;
}

ExperimentConfig unimodal_experiment(ScheduleKind schedule, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.rate = RateFunction::unimodal();
    cfg.cost = 10.0;
    cfg.sensors = 1;
    cfg.horizon = 1024;
    cfg.schedule = {schedule, 4};
    cfg.replications = 10;
    cfg.seed = seed;
    switch (schedule) {
        case ScheduleKind::Linear: cfg.name = "unimodal_linear"; break;
        case ScheduleKind::Sqrt: cfg.name = "unimodal_sqrt"; break;
        case ScheduleKind::CubeRoot: cfg.name = "unimodal_cuberoot"; break;
    }
    PolicyConfig ts;
    ts.kind = PolicyKind::Thompson;
    ts.prior = PriorParams(0.5, 0.5 / cfg.cost, 10.0 * cfg.rate.max_value());
    cfg.policies = {ts};
    return cfg;
}

ExperimentConfig bimodal_experiment(std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.name = "bimodal_baselines";
    cfg.rate = RateFunction::bimodal();
    cfg.cost = 2.0;
    cfg.sensors = 2;
    cfg.horizon = 1000;
    cfg.schedule = {ScheduleKind::CubeRoot, 16};
    cfg.replications = 10;
    cfg.seed = seed;

    const PriorParams prior(0.5, 0.5 / cfg.cost, 10.0 * cfg.rate.max_value());
    PolicyConfig ts{PolicyKind::Thompson, prior, 0.01, 0.0};
    // UCB gets the exact maximum, its most favourable setting
    PolicyConfig ucb{PolicyKind::Ucb, prior, 0.01, cfg.rate.max_value()};
    PolicyConfig mucb{PolicyKind::MUcb, prior, 0.01, 0.0};
    PolicyConfig eps{PolicyKind::EpsGreedy, prior, 0.01, 0.0};
    cfg.policies = {ts, ucb, mucb, eps};
    return cfg;
}

}  // namespace sensim
