#pragma once

#include <stdexcept>

namespace charpoly {

// Requested computation exceeds the configured feasibility bounds.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value that is a nonnegative integer by theorem came out otherwise;
// indicates an implementation bug, never bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace charpoly
