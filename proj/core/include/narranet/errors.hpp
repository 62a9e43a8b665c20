#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace narranet {

// Base class for every error the toolkit throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent input data (missing file, malformed record, ...).
struct DataError : Error {
    using Error::Error;
};

// Parse failure tied to a specific 1-based line of a text input.
struct ParseError : DataError {
    ParseError(const std::string& what, std::size_t line)
        : DataError("line " + std::to_string(line) + ": " + what), line_number(line) {}

    std::size_t line_number;
};

// A graph operation was asked of a graph that cannot support it
// (density of a single node, centrality of an edgeless graph, ...).
struct GraphError : Error {
    using Error::Error;
};

// An iterative numeric procedure hit its iteration cap before converging.
struct ConvergenceError : Error {
    using Error::Error;
};

// Model fitting found a class combination with no candidate node pair.
struct EmptyClassError : DataError {
    using DataError::DataError;
};

// A requested character does not appear in one of the networks under study.
struct AbsentCharacterError : DataError {
    using DataError::DataError;
};

// A simulation run directory is missing a replicate the manifest promises.
struct MissingReplicateError : DataError {
    using DataError::DataError;
};

}  // namespace narranet
