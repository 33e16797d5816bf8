#include "sensim/binning.hpp"

#include <cmath>
#include <stdexcept>

#include "sensim/errors.hpp"

namespace sensim {
namespace {

// Tolerance for endpoint-to-boundary snapping, in bin units. Dyadic meshes
// give exactly zero; non-dyadic bin counts stay within a few ulps.
constexpr double kAlignTol = 1e-9;

std::int64_t aligned_index(double x, std::uint32_t bins) {
    const double scaled = x * bins;
    const double nearest = std::nearbyint(scaled);
    if (std::abs(scaled - nearest) > kAlignTol) return -1;
    return static_cast<std::int64_t>(nearest);
}

// B_k subset of A? Exact for bin-aligned actions on nested meshes.
bool bin_inside(const Action& action, double lo, double hi) {
    for (const auto& iv : action.intervals())
        if (iv.lo <= lo && hi <= iv.hi) return true;
    return false;
}

}  // namespace

Mesh::Mesh(std::uint32_t bin_count, std::uint64_t created)
    : bins(bin_count), round_created(created) {
    if (bins == 0) throw std::invalid_argument("mesh needs at least one bin");
}

std::pair<double, double> bin_interval(const Mesh& mesh, std::uint32_t k) {
    if (k >= mesh.bins) throw std::out_of_range("bin index out of range");
    const double K = mesh.bins;
    return {k / K, (k + 1) / K};
}

std::uint32_t bin_of(const Mesh& mesh, double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("bin_of: x outside [0, 1]");
    auto k = static_cast<std::uint32_t>(x * mesh.bins);
    if (k >= mesh.bins) k = mesh.bins - 1;  // x = 1 lands in the last bin
    return k;
}

bool should_rebin(ScheduleKind kind, std::uint64_t t, std::uint64_t last_rebin) {
    switch (kind) {
        case ScheduleKind::Linear:
            return t >= 2 * last_rebin;
        case ScheduleKind::Sqrt:
            return t >= 4 * last_rebin;
        case ScheduleKind::CubeRoot:
            return t >= 8 * last_rebin;
    }
    return false;
}

std::vector<std::uint32_t> action_to_bins(const Action& action, const Mesh& mesh) {
    std::vector<std::uint32_t> bins;
    for (const auto& iv : action.intervals()) {
        const std::int64_t lo = aligned_index(iv.lo, mesh.bins);
        const std::int64_t hi = aligned_index(iv.hi, mesh.bins);
        if (lo < 0 || hi < 0)
            throw AlignmentError("action endpoint not on a bin boundary");
        for (std::int64_t k = lo; k < hi; ++k)
            bins.push_back(static_cast<std::uint32_t>(k));
    }
    return bins;
}

Action bins_to_action(const std::vector<std::uint32_t>& bins, const Mesh& mesh) {
    std::vector<Interval> intervals;
    const double K = mesh.bins;
    std::size_t i = 0;
    while (i < bins.size()) {
        if (bins[i] >= mesh.bins) throw std::out_of_range("bin index out of range");
        std::size_t j = i;
        while (j + 1 < bins.size() && bins[j + 1] == bins[j] + 1) ++j;
        intervals.push_back({bins[i] / K, (bins[j] + 1) / K});
        i = j + 1;
    }
    return Action(std::move(intervals));
}

BinStats stats_recompute(const History& history, const Mesh& mesh) {
    BinStats stats(mesh.bins);
    for (const auto& log : history) {
        for (std::uint32_t k = 0; k < mesh.bins; ++k) {
            const auto [lo, hi] = bin_interval(mesh, k);
            if (!bin_inside(log.action, lo, hi)) continue;
            stats.sensed[k] += 1;
            for (double x : log.events)
                if (bin_of(mesh, x) == k) stats.events[k] += 1;
        }
    }
    return stats;
}

BinTracker::BinTracker(RebinSchedule schedule)
    : schedule_(schedule), mesh_(schedule.initial_bins), stats_(schedule.initial_bins) {
    const auto k0 = schedule.initial_bins;
    if (k0 == 0 || (k0 & (k0 - 1)) != 0)
        throw std::invalid_argument("initial bin count must be a power of two");
}

void BinTracker::observe(std::uint64_t t, const Action& action,
                         std::vector<double> events) {
    for (std::uint32_t k : action_to_bins(action, mesh_)) stats_.sensed[k] += 1;
    for (double x : events) {
        if (!action.contains(x))
            throw std::invalid_argument("event outside the sensed action");
        stats_.events[bin_of(mesh_, x)] += 1;
    }
    history_.push_back({t, action, std::move(events)});
}

bool BinTracker::end_of_round(std::uint64_t t) {
    if (!should_rebin(schedule_.kind, t, last_rebin_)) return false;
    last_rebin_ = t;

    Mesh doubled(mesh_.bins * 2, t + 1);
    BinStats refined(doubled.bins);
    // A child is sensed exactly when its parent is: actions are unions of
    // whole bins of coarser (nested) meshes.
    for (std::uint32_t k = 0; k < mesh_.bins; ++k) {
        refined.sensed[2 * k] = stats_.sensed[k];
        refined.sensed[2 * k + 1] = stats_.sensed[k];
    }
    // Every stored event lies in its own child bin's sensed rounds (nested
    // meshes again), so H refines to a plain histogram of the raw events.
    for (const auto& log : history_)
        for (double x : log.events) refined.events[bin_of(doubled, x)] += 1;

    mesh_ = doubled;
    stats_ = std::move(refined);
    return true;
}

}  // namespace sensim
