#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sensim/action.hpp"

namespace sensim {

// Uniform mesh of `bins` cells on [0, 1]. Bin k (0-based) is
// [k/K, (k+1)/K); the final bin is closed at 1 so an event at exactly 1
// is counted.
struct Mesh {
    std::uint32_t bins = 1;
    std::uint64_t round_created = 1;

    explicit Mesh(std::uint32_t bin_count = 1, std::uint64_t created = 1);

    double width() const { return 1.0 / bins; }
};

// [lo, hi) of bin k; throws std::out_of_range for k >= bins.
std::pair<double, double> bin_interval(const Mesh& mesh, std::uint32_t k);

// Index of the bin containing x.
std::uint32_t bin_of(const Mesh& mesh, double x);

// Per-bin sufficient statistics: detected event counts and the number of
// rounds in which the whole bin lay inside the sensed action.
struct BinStats {
    std::vector<std::uint64_t> events;  // H_k
    std::vector<std::uint64_t> sensed;  // N_k

    explicit BinStats(std::uint32_t bins = 0) : events(bins, 0), sensed(bins, 0) {}
    std::size_t size() const { return events.size(); }
};

// One round of raw observations, kept so statistics can be rebuilt on the
// current mesh after refinements. Actions are bin-aligned with respect to
// the mesh active in their round.
struct RoundLog {
    std::uint64_t round = 0;
    Action action;
    std::vector<double> events;
};

using History = std::vector<RoundLog>;

enum class ScheduleKind { Linear, Sqrt, CubeRoot };

struct RebinSchedule {
    ScheduleKind kind = ScheduleKind::CubeRoot;
    std::uint32_t initial_bins = 4;  // must be a power of two
};

// True when f(t) >= 2 f(last_rebin) with f = t, sqrt(t) or cbrt(t);
// reduces to t >= m * last_rebin with m in {2, 4, 8}.
bool should_rebin(ScheduleKind kind, std::uint64_t t, std::uint64_t last_rebin);

// Bin indices exactly covered by a bin-aligned action; throws AlignmentError
// when an endpoint is not a bin boundary.
std::vector<std::uint32_t> action_to_bins(const Action& action, const Mesh& mesh);

// Assembles maximal runs of consecutive bins back into intervals.
// Inverse of action_to_bins for bin-aligned actions.
Action bins_to_action(const std::vector<std::uint32_t>& bins, const Mesh& mesh);

// Rebuilds (H, N) on `mesh` from raw history:
//   H_k = sum_j sum_l I{B_k in A_j} I{x_jl in B_k},  N_k = sum_j I{B_k in A_j}.
// Slow reference path, independent of the incremental bookkeeping.
BinStats stats_recompute(const History& history, const Mesh& mesh);

// Owns the evolving mesh, incrementally maintained statistics and the raw
// history of one experiment run. Rebinning is evaluated at the end of a
// round; a doubled mesh takes effect from the next round.
class BinTracker {
public:
    explicit BinTracker(RebinSchedule schedule);

    // Record the observations of round t (action must be aligned to the
    // current mesh).
    void observe(std::uint64_t t, const Action& action, std::vector<double> events);

    // End-of-round rebin check; returns true when the mesh doubled.
    bool end_of_round(std::uint64_t t);

    const Mesh& mesh() const { return mesh_; }
    const BinStats& stats() const { return stats_; }
    const History& history() const { return history_; }
    std::uint64_t last_rebin_round() const { return last_rebin_; }

private:
    RebinSchedule schedule_;
    Mesh mesh_;
    BinStats stats_;
    History history_;
    std::uint64_t last_rebin_ = 1;
};

}  // namespace sensim
