#pragma once

#include <stdexcept>
#include <string>

namespace sge {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid graph input: loops, vertices out of range, duplicate edges in
// strict mode, disconnected input.
struct GraphError : Error {
    using Error::Error;
};

// Malformed file contents (edge list, graph6, witness JSON).
struct ParseError : Error {
    using Error::Error;
};

// Structurally broken witness: foreign vertices or paths whose consecutive
// vertices are not adjacent. A well-formed but non-geodesic path is not an
// error; it makes the witness invalid instead.
struct WitnessError : Error {
    using Error::Error;
};

// Parameters outside the domain a closed-form formula or construction is
// defined for (parts of size 1, odd orders for the 1-factorization, ...).
struct HypothesisError : Error {
    using Error::Error;
};

// The brute-force oracle refuses instances above its size guard.
struct InstanceTooLargeError : Error {
    using Error::Error;
};

}  // namespace sge
