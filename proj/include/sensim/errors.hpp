#pragma once

#include <stdexcept>
#include <string>

namespace sensim {

// Action endpoint does not sit on a bin boundary of the active mesh.
struct AlignmentError : std::invalid_argument {
    explicit AlignmentError(const std::string& what) : std::invalid_argument(what) {}
};

// Statistic requested for a bin that has never been sensed (N = 0).
struct UndefinedStatistic : std::domain_error {
    explicit UndefinedStatistic(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sensim
