#pragma once

#include <stdexcept>
#include <string>

namespace morient {

// Malformed input: bad instance data, broken invariants, parse failures.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An orientation that does not cover exactly the graph's edge set.
class InvalidOrientationError : public ValidationError {
public:
    explicit InvalidOrientationError(const std::string& msg) : ValidationError(msg) {}
};

// A structurally valid instance handed to a solver whose precondition it
// violates (non-path input to the path solver, oracle size cap, ...).
// The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace morient
