#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sensim/harness.hpp"

namespace sensim {

// Doubles are serialized with 17 significant digits so parsing recovers the
// exact bit pattern.
std::string format_double(double value);

std::string action_to_json_string(const Action& action);
Action action_from_json_string(const std::string& text);

// One CSV per (experiment, policy):
//   run_id,t,K_t,action_json,reward,inst_regret,disc_regret,cum_regret
void write_trace_csv(const std::filesystem::path& path, const PolicyOutcome& outcome);

struct TraceRow {
    std::uint32_t run_id = 0;
    std::uint64_t t = 0;
    std::uint32_t k_bins = 0;
    Action action;
    double reward = 0.0;
    double inst_regret = 0.0;
    double disc_regret = 0.0;
    double cum_regret = 0.0;
};

std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path);

// Per-policy mean and 95% empirical interval of cumulative regret at every
// round, final per-run figures and the theorem bound evaluation.
void write_summary_json(const std::filesystem::path& path, const ExperimentConfig& config,
                        const ExperimentResult& result);

// Final-round posterior state of one run, for external plotting.
void write_posterior_json(const std::filesystem::path& path, const std::string& policy,
                          const RunTrace& run);

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig config_from_json_file(const std::filesystem::path& path);

// Runs the experiment and writes all outputs under out_dir; returns the
// paths written (traces, summary, posterior snapshots).
std::vector<std::filesystem::path> run_and_emit(const ExperimentConfig& config,
                                                const std::filesystem::path& out_dir);

// The two preset studies: "unimodal" (three rebinning schedules, Thompson
// sampling) or "bimodal" (four policies, cube-root schedule).
std::vector<std::filesystem::path> replicate_paper(const std::string& experiment,
                                                   const std::filesystem::path& out_dir,
                                                   std::optional<std::uint64_t> seed);

}  // namespace sensim
