#pragma once

#include <stdexcept>

namespace cliquepoly {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad graph construction, unknown vertex id, missing or tied ranks.
class GraphError : public Error {
public:
    using Error::Error;
};

/// A polynomial that does not satisfy the contract of the operation
/// (e.g. a constant term other than 1 where an f-function is expected).
class PolyError : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold did not. Never caused by valid input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a hard size guard of an exhaustive routine.
class LimitError : public Error {
public:
    using Error::Error;
};

} // namespace cliquepoly
