#pragma once

#include <stdexcept>
#include <string>

namespace weddle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dimension or structure mismatch (non-square, odd skew size, wrong arity).
class ShapeError : public Error {
public:
    using Error::Error;
};

// Operation needs a field (or a specific field) and got something else.
class UnsupportedDomain : public Error {
public:
    using Error::Error;
};

// A mathematical invariant the input must satisfy does not hold.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A request exceeds an explicit resource bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

// A computation that must succeed by theory did not; indicates a bug.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace weddle
