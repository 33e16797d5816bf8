#include "sensim/action.hpp"

#include <stdexcept>

namespace sensim {

Action::Action(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (!(0.0 <= iv.lo && iv.lo < iv.hi && iv.hi <= 1.0))
            throw std::invalid_argument("action interval must satisfy 0 <= lo < hi <= 1");
        if (i > 0 && intervals_[i - 1].hi > iv.lo)
            throw std::invalid_argument("action intervals must be sorted and disjoint");
    }
}

double Action::total_length() const {
    double total = 0.0;
    for (const auto& iv : intervals_) total += iv.length();
    return total;
}

bool Action::contains(double x) const {
    for (const auto& iv : intervals_) {
        if (x < iv.lo) return false;
        if (x < iv.hi || (x == iv.hi && iv.hi == 1.0)) return true;
    }
    return false;
}

}  // namespace sensim
