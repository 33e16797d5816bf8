#include "sensim/asim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace sensim {
namespace {

struct Node {
    std::uint32_t lo_bin;
    std::uint32_t hi_bin;
    double weight;
    std::int32_t prev;
    std::int32_t next;
    bool alive;
    bool positive;  // sign class, not the numeric sign of a zero weight
};

// min-heap entry: (|weight|, leftmost bin for ties, node id)
using HeapEntry = std::tuple<double, std::uint32_t, std::int32_t>;

Action intervals_to_action(std::vector<const Node*> chosen, const Mesh& mesh) {
    std::sort(chosen.begin(), chosen.end(),
              [](const Node* a, const Node* b) { return a->lo_bin < b->lo_bin; });
    const double K = mesh.bins;
    std::vector<Interval> intervals;
    intervals.reserve(chosen.size());
    for (const Node* n : chosen)
        intervals.push_back({n->lo_bin / K, (n->hi_bin + 1) / K});
    return Action(std::move(intervals));
}

bool check_alternation(const std::vector<Node>& nodes, std::int32_t head) {
    for (std::int32_t i = head; i >= 0; i = nodes[i].next) {
        const std::int32_t j = nodes[i].next;
        if (j >= 0 && nodes[i].positive == nodes[j].positive) return false;
    }
    return true;
}

}  // namespace

std::vector<WeightedInterval> build_initial_intervals(std::span<const double> bin_weights) {
    if (bin_weights.empty())
        throw std::invalid_argument("build_initial_intervals: no bin weights");
    std::vector<WeightedInterval> runs;
    bool cur_positive = true;
    for (std::uint32_t k = 0; k < bin_weights.size(); ++k) {
        const double w = bin_weights[k];
        const bool positive = w > 0.0 || (w == 0.0 && (runs.empty() || cur_positive));
        if (runs.empty() || positive != cur_positive) {
            runs.push_back({k, k, w});
            cur_positive = positive;
        } else {
            runs.back().hi_bin = k;
            runs.back().weight += w;
        }
    }
    return runs;
}

Action asim_select_weights(std::span<const double> bin_weights, std::uint32_t sensors,
                           const Mesh& mesh, AsimDiagnostics* diag) {
    if (sensors == 0) throw std::invalid_argument("asim: need at least one sensor");
    if (bin_weights.size() != mesh.bins)
        throw std::invalid_argument("asim: one weight per mesh bin required");

    const auto runs = build_initial_intervals(bin_weights);
    if (diag) *diag = AsimDiagnostics{runs.size(), 0, 0, true};

    std::vector<Node> nodes;
    nodes.reserve(2 * runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i)
        nodes.push_back({runs[i].lo_bin, runs[i].hi_bin, runs[i].weight,
                         static_cast<std::int32_t>(i) - 1,
                         i + 1 < runs.size() ? static_cast<std::int32_t>(i) + 1 : -1,
                         true, runs[i].weight > 0.0});

    std::int32_t head = 0;
    std::int32_t tail = static_cast<std::int32_t>(nodes.size()) - 1;

    auto unlink = [&](std::int32_t id) {
        nodes[id].alive = false;
        if (nodes[id].prev >= 0) nodes[nodes[id].prev].next = nodes[id].next;
        if (nodes[id].next >= 0) nodes[nodes[id].next].prev = nodes[id].prev;
        if (head == id) head = nodes[id].next;
        if (tail == id) tail = nodes[id].prev;
    };
    // No optimal action keeps a nonpositive end interval.
    auto trim_ends = [&] {
        while (head >= 0 && nodes[head].weight <= 0.0) unlink(head);
        while (tail >= 0 && nodes[tail].weight <= 0.0) unlink(tail);
    };
    trim_ends();
    if (head < 0) return Action{};

    std::size_t positives = 0;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    for (std::int32_t i = head; i >= 0; i = nodes[i].next) {
        if (nodes[i].weight > 0.0) ++positives;
        heap.push({std::abs(nodes[i].weight), nodes[i].lo_bin, i});
    }

    // Each step retires the interval with the globally smallest |weight|:
    // an interior one merges with both neighbours, a (positive) end one is
    // discarded outright. Either way the positive count drops by one, which
    // is exactly what the optimality induction needs from the pivot.
    while (positives > sensors) {
        std::int32_t pivot = -1;
        while (!heap.empty()) {
            const auto [w, lo, id] = heap.top();
            heap.pop();
            if (nodes[id].alive) {
                pivot = id;
                break;
            }
        }
        if (pivot < 0) break;  // unreachable: alive nodes always carry an entry

        if (nodes[pivot].prev < 0 || nodes[pivot].next < 0) {
            unlink(pivot);
            trim_ends();  // the exposed negative neighbour goes too
            positives -= 1;
            if (diag) diag->drops += 1;
            continue;
        }

        const std::int32_t left = nodes[pivot].prev;
        const std::int32_t right = nodes[pivot].next;
        Node merged{nodes[left].lo_bin, nodes[right].hi_bin,
                    nodes[left].weight + nodes[pivot].weight + nodes[right].weight,
                    nodes[left].prev, nodes[right].next, true, nodes[left].positive};
        nodes[left].alive = nodes[pivot].alive = nodes[right].alive = false;
        const auto id = static_cast<std::int32_t>(nodes.size());
        nodes.push_back(merged);
        if (merged.prev >= 0) nodes[merged.prev].next = id;
        if (merged.next >= 0) nodes[merged.next].prev = id;
        if (head == left) head = id;
        if (tail == right) tail = id;
        heap.push({std::abs(merged.weight), merged.lo_bin, id});

        // merging through a valley (or over a weak peak) nets one positive less
        positives -= 1;

        if (diag) {
            diag->merges += 1;
            diag->alternation_ok = diag->alternation_ok && check_alternation(nodes, head);
        }
    }

    std::vector<const Node*> chosen;
    for (std::int32_t i = head; i >= 0; i = nodes[i].next)
        if (nodes[i].weight > 0.0) chosen.push_back(&nodes[i]);
    return intervals_to_action(std::move(chosen), mesh);
}

Action asim_select(std::span<const double> bin_rates, double cost, std::uint32_t sensors,
                   const Mesh& mesh, AsimDiagnostics* diag) {
    std::vector<double> weights(bin_rates.size());
    const double width = mesh.width();
    for (std::size_t k = 0; k < bin_rates.size(); ++k)
        weights[k] = width * (bin_rates[k] - cost);
    return asim_select_weights(weights, sensors, mesh, diag);
}

Action brute_force_select(std::span<const double> bin_weights, std::uint32_t sensors,
                          const Mesh& mesh) {
    const std::size_t K = bin_weights.size();
    if (K > 20) throw std::invalid_argument("brute force limited to 20 bins");
    if (K != mesh.bins)
        throw std::invalid_argument("brute force: one weight per mesh bin required");

    std::uint32_t best_mask = 0;
    double best_weight = 0.0;  // empty action
    int best_bits = 0;

    const auto lex_smaller = [K](std::uint32_t a, std::uint32_t b) {
        for (std::size_t k = 0; k < K; ++k) {
            const bool in_a = a >> k & 1u, in_b = b >> k & 1u;
            if (in_a != in_b) return in_a;  // earlier bin included first
        }
        return false;
    };

    for (std::uint32_t mask = 1; mask < (1u << K); ++mask) {
        std::uint32_t runs = 0;
        double weight = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            if (!(mask >> k & 1u)) continue;
            weight += bin_weights[k];
            if (k == 0 || !(mask >> (k - 1) & 1u)) ++runs;
        }
        if (runs > sensors) continue;
        const int bits = std::popcount(mask);
        const bool better =
            weight > best_weight ||
            (weight == best_weight &&
             (bits < best_bits || (bits == best_bits && lex_smaller(mask, best_mask))));
        if (better) {
            best_mask = mask;
            best_weight = weight;
            best_bits = bits;
        }
    }

    std::vector<std::uint32_t> bins;
    for (std::size_t k = 0; k < K; ++k)
        if (best_mask >> k & 1u) bins.push_back(static_cast<std::uint32_t>(k));
    return bins_to_action(bins, mesh);
}

double action_weight(const Action& action, std::span<const double> bin_weights,
                     const Mesh& mesh) {
    double total = 0.0;
    for (std::uint32_t k : action_to_bins(action, mesh)) total += bin_weights[k];
    return total;
}

}  // namespace sensim
