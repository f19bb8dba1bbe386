#pragma once

#include <stdexcept>
#include <string>

namespace hera {

struct HeraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, unknown options, non-numeric values.
struct ParseError : HeraError {
    using HeraError::HeraError;
};

// Parameter constraint violations (feasibility bound, partition divisibility,
// unsupported field sizes).
struct ParamError : HeraError {
    using HeraError::HeraError;
};

// A linear system that was expected to be invertible is not.
struct SingularError : HeraError {
    using HeraError::HeraError;
};

// A security audit failed.
struct AuditError : HeraError {
    using HeraError::HeraError;
};

} // namespace hera
