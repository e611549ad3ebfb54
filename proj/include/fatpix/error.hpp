#pragma once

#include <stdexcept>
#include <string>

namespace fatpix {

// Malformed input data: bad file grammar, bad address digits, dimension
// mismatches between automaton parts.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural invariant violations of in-memory objects (an IFS that fails
// validation, an automaton whose vectors disagree with its state count).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation would exceed a configured resource limit.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fatpix
