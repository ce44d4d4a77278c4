#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

// Malformed or out-of-range input (file contents, vertex indices, parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds a documented size cap of an exact backend.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for the arguments.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed, or a guaranteed structural property
// failed to hold.  Indicates a bug in this library, not bad input.
class InternalInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rigidity
