#pragma once

#include <stdexcept>
#include <string>

namespace findyn {

// Error taxonomy. The CLI maps these onto exit codes: anything that makes a
// request unanswerable (malformed input, bad parameters, violated
// preconditions, unsupported capability) exits 1, exhausted resource budgets
// exit 3. Failed --assert checks are not errors; they exit 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input: ragged tables, out-of-range map images, bad JSON.
struct input_error : error {
    using error::error;
};

// Invalid argument values: negative epsilon, zero power, non-bijective h.
struct parameter_error : error {
    using error::error;
};

// Structural precondition not met: set not invariant, set not strongly
// connected, orbit segment inconsistent with the map.
struct precondition_error : error {
    using error::error;
};

// Operation requires a capability the system lacks (typically bijectivity).
struct capability_error : error {
    using error::error;
};

// Explicit resource budget exceeded; results are never silently truncated.
struct budget_error : error {
    using error::error;
};

}  // namespace findyn
