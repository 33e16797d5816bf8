#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sensim {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// A union of disjoint subintervals of [0, 1], sorted left to right.
// One sensor covers one interval, so a policy with U sensors returns
// at most U of them. May be empty (no sensing).
class Action {
public:
    Action() = default;
    explicit Action(std::vector<Interval> intervals);

    static Action full() { return Action({{0.0, 1.0}}); }

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }

    double total_length() const;

    // Treats each interval as [lo, hi); x = 1 counts when hi = 1.
    bool contains(double x) const;

    bool operator==(const Action&) const = default;

private:
    std::vector<Interval> intervals_;
};

}  // namespace sensim
