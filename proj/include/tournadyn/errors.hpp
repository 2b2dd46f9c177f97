#pragma once

#include <stdexcept>
#include <string>

namespace tournadyn {

// Bad vertex ids, absent arcs, stale handles, malformed input.
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation called on a state that violates its stated precondition
// (vertex inside the prefix, vertex already/not removed, ...).
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Removal capacity |F| <= k would be exceeded.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// The caller-supplied promise (FAST/FVST bound) is observably false.
struct PromiseViolation : std::runtime_error {
    explicit PromiseViolation(const std::string& what) : std::runtime_error(what) {}
};

// Exact oracle asked for an instance beyond its size limit.
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Query parameter outside the structure's admissible range (e.g. k > gK).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed tournament / stream file.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tournadyn
