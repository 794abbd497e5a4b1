#pragma once

#include <stdexcept>
#include <string>

namespace amcc {

// Bad input to an operation (unknown context, zero counts, malformed data).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input parses but breaks a documented precondition, e.g. a signaling model
// handed to an operation that needs no-signaling.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace amcc
