#pragma once

#include <stdexcept>
#include <string>

namespace fdo {

/// Malformed graph input: self-loop, duplicate pair, bad id, negative weight.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An oracle was asked to build on a graph that violates its preconditions.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A query that the oracle cannot answer (wrong failure count, bad ids).
class QueryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that does not parse as one of the file formats.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fdo
