#pragma once

#include <stdexcept>
#include <string>

namespace g2def {

// Input could not be read (bad text encoding, malformed JSON, unknown name).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant failed (non-reducing split, Jacobi failure, bad
// frame, ...). The message names the violated invariant.
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact identity that must hold mathematically did not; signals a bug or
// an inconsistent convention rather than bad input.
struct verification_failure : std::runtime_error {
    explicit verification_failure(const std::string& msg) : std::runtime_error(msg) {}
};

struct division_by_zero : std::runtime_error {
    division_by_zero() : std::runtime_error("division by zero") {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invariant_violation(msg);
}

} // namespace g2def
