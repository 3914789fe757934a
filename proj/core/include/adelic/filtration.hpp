// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "adelic/log_value.hpp"
#include "adelic/power_series.hpp"

namespace adelic {

/// Sections of O(D, D) on P^1 x P^1 in the monomial basis x^a y^b,
/// 0 <= a, b <= D, indexed by a * (D + 1) + b; base point (0, 0).
struct AmbientSpec {
    std::size_t D = 1;
    std::size_t dimension() const noexcept { return (D + 1) * (D + 1); }
};

/// jets[j][k] = coefficient of t^k in t^a phi(t)^b for monomial j = (a, b).
/// Requires phi(0) = 0 and truncation >= i_max + 1.
std::vector<std::vector<Rational>> jet_matrix(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max);

struct FiltrationTable {
    std::size_t D = 0;
    std::size_t i_max = 0;
    std::vector<unsigned> ranks;          // rank(E^i / E^{i+1}), i = 0..i_max
    std::size_t limit_dimension = 0;      // dim E^{i_max + 1}
    std::optional<std::size_t> stationary_index;
    /// A basis of E^{i_max + 1} (monomial coefficients).
    std::vector<std::vector<Rational>> limit_basis;
};

/// Exact ranks of the successive quotients of the vanishing filtration.
/// stationary_index is the least i with E^i = E^{i_max+1} != 0, provided
/// rank(E^{i_max}/E^{i_max+1}) = 0 (the table shows a stationary stretch).
FiltrationTable vanishing_filtration(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max);

/// Tables for several D, computed concurrently (thread count from
/// ADELIC_THREADS, default hardware concurrency).
std::vector<FiltrationTable> vanishing_filtrations(const PowerSeriesTrunc &phi, const std::vector<std::size_t> &Ds,
                                                   std::size_t i_max);

/// sum (i/D) rank_i / sum rank_i. Throws EmptyTable.
Rational algebraicity_ratio(const FiltrationTable &table);

struct JetNormEntry {
    std::size_t D = 0;
    std::size_t i = 0;
    LogValue log_norm = LogValue::minus_infinity(); // valuation units at p
    /// Section of E^i realizing the norm (monomial coefficients); empty for -inf.
    std::vector<Rational> witness;
};

struct JetNormTable {
    Place place = Place::archimedean();
    std::vector<JetNormEntry> entries;
    /// Stored coefficients up to i_max are p-integral (lattice pairing unscaled).
    bool integral_coefficients = true;
};

/// Norms of phi^i_D for i = 0..i_max on the saturated lattice E^i cap Z_(p)^n,
/// by Z_(p)-column elimination. One pass per D.
std::vector<JetNormEntry> jet_norms_padic(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max, std::uint64_t p);

JetNormEntry jet_operator_norm_padic(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i, std::uint64_t p);

/// Concurrent over D.
JetNormTable jet_norm_table_padic(const PowerSeriesTrunc &phi, const std::vector<std::size_t> &Ds, std::size_t i_max,
                                  std::uint64_t p);

struct ArchJetEstimate {
    double lo;  // certified lower bound of log ||phi^i_D|| (sampled sup bound)
    double hi;  // Cauchy upper bound D log max(1, M) - i log r
    double radius;   // r used in the Cauchy estimate
    double majorant; // M >= sup_{|t| <= r} |phi|
    std::size_t samples; // grid points per circle
};

/// Throws UnknownConvergenceRadius when the identity supplies no radius or
/// majorant. `r` defaults to half the radius, capped at 1/2.
ArchJetEstimate jet_norm_arch_estimate(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i, std::size_t samples,
                                       std::optional<double> r = std::nullopt);

struct RhoResult {
    LogValue rho_window = LogValue::minus_infinity();
    LogValue canonical_log_norm = LogValue::minus_infinity(); // equals rho_window (||d/dt||_0 = 1)
    std::size_t qualifying = 0;
    std::optional<JetNormEntry> argmax;
};

/// max over entries with i >= 1 and i/D >= threshold of (1/i) log ||phi^i_D||.
/// Throws EmptyGrid.
RhoResult rho_and_canonical(const std::vector<JetNormTable> &tables, const Place &place, const Rational &threshold);

/// rho_window <= -log S (the capacitary log-norm of the disk of radius S).
bool schwarz_comparison(const LogValue &rho_window, const LogValue &log_size);

} // namespace adelic
