// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adelic/capacity.hpp"
#include "adelic/log_value.hpp"
#include "adelic/polynomial.hpp"
#include "adelic/power_series.hpp"

namespace adelic {

struct RadiusBound {
    LogValue log_radius;
    Exactness exactness;
};

/// Per-prime lower bound on log R_p: the identity's radius when tagged,
/// otherwise min_{1 <= n <= N} v_p(c_n)/n (truncation-bound).
std::map<std::uint64_t, RadiusBound> radii_lower_bounds(const PowerSeriesTrunc &phi,
                                                        const std::set<std::uint64_t> &primes);

/// Primes dividing some coefficient denominator.
std::set<std::uint64_t> denominator_primes(const PowerSeriesTrunc &phi);

struct HankelOracle {
    enum class Kind { Rational, NoRational, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::size_t m = 0; // numerator degree bound
    std::size_t n = 0; // denominator degree bound
    std::size_t k_max = 0;
    std::string detail;
};

const char *to_string(HankelOracle::Kind k);

/// Exact Hankel determinants det(c_{k+i+j})_{0<=i,j<=n}. Reports the least n,
/// then the least m <= k_max, for which every window k >= max(0, m+1-n) with
/// k + 2n <= N vanishes (and at least n + 1 windows exist). Requires
/// N >= 2 k_max + 2.
HankelOracle hankel_rationality_oracle(const PowerSeriesTrunc &phi, std::size_t k_max);

/// Hankel determinant of order n+1 starting at index k.
Rational hankel_determinant(const PowerSeriesTrunc &phi, std::size_t k, std::size_t n);

struct PadeResult {
    Polynomial P;
    Polynomial Q; // Q(0) = 1
    bool verified = false;
    std::optional<std::size_t> first_mismatch;
};

/// Solves Q phi = P mod t^{m+n+1}; verifies against every stored
/// coefficient. Throws TruncationTooShort, SingularSystem.
PadeResult pade_attempt(const PowerSeriesTrunc &phi, std::size_t m, std::size_t n);

/// As pade_attempt, throwing VerificationFailure (with the first mismatching
/// index in the message) when verification fails.
PadeResult pade_reconstruct(const PowerSeriesTrunc &phi, std::size_t m, std::size_t n);

struct SeriesCase {
    PowerSeriesTrunc phi;
    AdelicTube tube; // base point 0
    bool meromorphy_asserted = false;
    std::size_t k_max = 8;
};

enum class CertificateStatus { CriterionSatisfied, CriterionNotSatisfied, InconsistentDeclaration };

const char *to_string(CertificateStatus s);

struct Certificate {
    CertificateStatus status = CertificateStatus::CriterionNotSatisfied;
    std::optional<ArakelovDegreeReport> adelic_degree;
    HankelOracle oracle;
    std::optional<PadeResult> reconstruction; // reduced P/Q when the oracle finds one
    bool consistency = false;                 // reconstruction reproduces all coefficients
    bool boundary = false;                    // degree 0 (or undecided around 0)
    bool meromorphy_asserted = false;
    std::vector<std::string> inconsistencies;
    std::map<std::uint64_t, RadiusBound> radii_bounds;
};

/// Throws TruncationTooShort when N < 2 k_max + 2 (see hankel_rationality_oracle).
Certificate certify(const SeriesCase &c);

} // namespace adelic
