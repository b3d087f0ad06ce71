// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every engine.
 *
 * InputError covers malformed or out-of-contract arguments (CLI exit 1);
 * EngineError covers numerical or exactness failures detected while running
 * a well-formed request (CLI exit 2).
 */

#pragma once

#include <stdexcept>
#include <string>

namespace fockhrt {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    /// Machine-readable error tag, e.g. "needs-larger-truncation".
    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InputError : public Error {
public:
    using Error::Error;
};

class EngineError : public Error {
public:
    using Error::Error;
};

inline InputError invalid_argument(const std::string& what) {
    return InputError("invalid-argument", what);
}

inline InputError precondition_violation(const std::string& what) {
    return InputError("precondition-violation", what);
}

class NeedsLargerTruncation : public EngineError {
public:
    NeedsLargerTruncation(const std::string& what, double deviation)
        : EngineError("needs-larger-truncation", what), deviation_(deviation) {}

    [[nodiscard]] double deviation() const noexcept { return deviation_; }

private:
    double deviation_;
};

inline EngineError arithmetic_overflow(const std::string& what) {
    return EngineError("arithmetic-overflow", what);
}

inline EngineError insufficient_grid(const std::string& what) {
    return EngineError("insufficient-grid", what);
}

inline EngineError aliasing_not_converged(const std::string& what) {
    return EngineError("aliasing-not-converged", what);
}

inline EngineError exactness_required(const std::string& what) {
    return EngineError("exactness-required", what);
}

inline InputError conductor_mismatch(const std::string& what) {
    return InputError("conductor-mismatch", what);
}

/// Raised when an exact self-check fails. Always a defect in this library.
inline EngineError verification_failure(const std::string& what) {
    return EngineError("internal-verification-failure", what);
}

}  // namespace fockhrt
