// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adelic {

/// Named domain errors. The CLI serializes `name()` verbatim.
enum class ErrorCode {
    InvalidArgument,
    NotPrime,
    ZeroSeries,
    IdentityMismatch,
    NotPointed,
    DerivativeNotUnit,
    TruncationTooShort,
    KernelViolation,
    TCoversComponent,
    NotNegativeDefinite,
    SingularSystem,
    MismatchedGraphs,
    PoleMismatch,
    MultiplePoles,
    EvaluationAtPole,
    UnsupportedShape,
    BasePointOutsideDomain,
    ContainmentViolation,
    UnknownConvergenceRadius,
    EmptyTable,
    EmptyGrid,
    VerificationFailure,
    ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

  private:
    ErrorCode code_;
};

} // namespace adelic
