#ifndef DESYM_ERRORS_HPP
#define DESYM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace desym {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (graph6 or edge list). Carries the byte offset of the
// first offending byte.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Input is syntactically fine but violates a structural rule (loop, duplicate
// edge, colour out of range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Caller broke a documented precondition.
class ContractViolation : public Error {
public:
    using Error::Error;
};

class NotConnectedError : public Error {
public:
    NotConnectedError() : Error("graph is not connected") {}
};

class NotATreeError : public Error {
public:
    NotATreeError() : Error("graph is not a tree") {}
};

// The one case the vertex-to-edge construction cannot handle.
class BicentredTreeError : public Error {
public:
    BicentredTreeError() : Error("bicentred trees are not supported by vertex_to_edge") {}
};

class GroupTooLargeError : public Error {
public:
    explicit GroupTooLargeError(std::size_t cap)
        : Error("automorphism group exceeds the configured cap of " + std::to_string(cap)),
          cap(cap) {}
    std::size_t cap;
};

class BoundExceededError : public Error {
public:
    BoundExceededError(const std::string& msg, long long bound)
        : Error(msg), bound(bound) {}
    long long bound;
};

// A verified construction failed verification, or a should-be-impossible
// branch was reached. Always a bug, never a normal result.
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

} // namespace desym

#endif
