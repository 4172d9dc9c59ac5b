#pragma once

#include <stdexcept>
#include <string>

namespace sparse_powers {

// Malformed input text (edge lists, ordering files, CLI parameters).
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a configured oracle/search limit.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant that should hold by construction was violated;
// indicates corrupted input data or an implementation bug.
struct validation_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace sparse_powers
