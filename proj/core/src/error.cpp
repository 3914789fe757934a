// SPDX-License-Identifier: Apache-2.0
#include "adelic/error.hpp"

namespace adelic {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::DerivativeNotUnit: return "DerivativeNotUnit";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::KernelViolation: return "KernelViolation";
    case ErrorCode::TCoversComponent: return "TCoversComponent";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::MismatchedGraphs: return "MismatchedGraphs";
    case ErrorCode::PoleMismatch: return "PoleMismatch";
    case ErrorCode::MultiplePoles: return "MultiplePoles";
    case ErrorCode::EvaluationAtPole: return "EvaluationAtPole";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::BasePointOutsideDomain: return "BasePointOutsideDomain";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::UnknownConvergenceRadius: return "UnknownConvergenceRadius";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace adelic
