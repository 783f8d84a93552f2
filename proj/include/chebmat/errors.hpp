#pragma once

#include <stdexcept>
#include <string>

namespace chebmat {

// Error taxonomy shared by the whole library. The C API and the CLI map
// these onto status / exit codes, so keep the hierarchy flat and stable.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input shapes (non-square data, mismatched dimensions).
struct dimension_error : error {
    using error::error;
};

// Index outside an operation's validity window.
struct range_error : error {
    using error::error;
};

// A structural hypothesis of a formula is violated (SS^tS != 2S, rank != 1,
// non-scalar multiple, loop at a gluing vertex, ...). The message names the
// violated condition.
struct hypothesis_error : error {
    using error::error;
};

// A trace produced a state that is impossible for a valid Ext-matrix.
struct model_violation_error : error {
    using error::error;
};

// Operation not defined for this family / certificate kind.
struct unsupported_error : error {
    using error::error;
};

// Input fails a precondition check (asymmetric, negative, disconnected...).
struct validation_error : error {
    using error::error;
};

// Matrix file / JSON parse failure.
struct parse_error : error {
    using error::error;
};

// A bounded search ran out of budget before finding its witness.
struct not_found_error : error {
    using error::error;
};

}  // namespace chebmat
