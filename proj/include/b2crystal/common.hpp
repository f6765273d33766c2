#pragma once

#include <stdexcept>
#include <string>

namespace b2crystal {

// Errors raised while navigating or parsing graphs. All of them indicate bad
// input; invariant breakage inside a construction throws std::logic_error
// instead (see require()).
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeViolation : GraphError {
    using GraphError::GraphError;
};

struct NoSource : GraphError {
    using GraphError::GraphError;
};

struct MultipleSources : GraphError {
    using GraphError::GraphError;
};

struct ParseError : GraphError {
    using GraphError::GraphError;
};

struct ParameterError : GraphError {
    using GraphError::GraphError;
};

// A split component whose central points do not chain into a single diagonal.
struct DiagonalNotChain : GraphError {
    using GraphError::GraphError;
};

// Hard assertion. Active in all build types; a failure is a program bug,
// not a recoverable condition.
inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::logic_error("invariant violated: " + message);
}

} // namespace b2crystal
