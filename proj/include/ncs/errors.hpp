#pragma once

#include <stdexcept>
#include <string>

namespace ncs {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic misuse: inversion of zero, vanishing denominator under a
// specialization, and the like.
struct arithmetic_error : error {
    using error::error;
};

// A precondition on a symbolic construction failed (non-central element,
// dimension mismatch, missing involution, non-confluent catalog system).
struct construction_error : error {
    using error::error;
};

// Bad user-facing input: parse errors carry a byte offset into the source.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t offset)
        : error(msg + " (at byte " + std::to_string(offset) + ")"), position(offset) {}
    std::size_t position;
};

// Numeric parameter outside the admissible domain.
struct domain_error : error {
    using error::error;
};

} // namespace ncs
