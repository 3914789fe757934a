// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/log_value.hpp"
#include "adelic/power_series.hpp"

namespace adelic {

/// Primes <= bound in increasing order (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Term alpha * log p / (p - 1) or alpha * log p / (p (p - 1)).
enum class PatternForm { OverPMinus1, OverPTimesPMinus1 };

const char *to_string(PatternForm f);

struct Pattern {
    Rational alpha;
    PatternForm form = PatternForm::OverPMinus1;
    /// alpha * (1/(p-1)) or alpha * (1/(p(p-1))) in valuation units at p.
    Rational at(std::uint64_t p) const;
};

/// Per-prime sizes S_p, as log S_p <= 0.
class SizeRule {
  public:
    enum class Kind { Tabulated, Pattern, DerivedFromSeries };

    /// Missing primes have S_p = 1.
    static SizeRule tabulated(std::map<std::uint64_t, LogValue> log_sizes);
    /// log S_p = -pattern(p), except at the listed primes.
    static SizeRule pattern(Pattern pattern, std::map<std::uint64_t, LogValue> exceptional = {});
    static SizeRule derived(PowerSeriesTrunc phi);

    Kind kind() const noexcept { return kind_; }
    const std::map<std::uint64_t, LogValue> &table() const noexcept { return table_; }
    const std::optional<Pattern> &pattern_term() const noexcept { return pattern_; }
    const std::optional<PowerSeriesTrunc> &series() const noexcept { return series_; }

  private:
    Kind kind_ = Kind::Tabulated;
    std::map<std::uint64_t, LogValue> table_;
    std::optional<Pattern> pattern_;
    std::optional<PowerSeriesTrunc> series_;
};

/// Per-place radii R_v, as log R_v (any sign).
class RadiusRule {
  public:
    enum class Kind { Tabulated, Pattern, DerivedFromSeries };

    /// Missing places have R_v = 1.
    static RadiusRule tabulated(std::map<Place, LogValue> log_radii);
    /// log R_p = -pattern(p) at finite places; `exceptional` overrides,
    /// including the archimedean place.
    static RadiusRule pattern(Pattern pattern, std::map<Place, LogValue> exceptional = {});
    static RadiusRule derived(PowerSeriesTrunc g);

    Kind kind() const noexcept { return kind_; }
    const std::map<Place, LogValue> &table() const noexcept { return table_; }
    const std::optional<Pattern> &pattern_term() const noexcept { return pattern_; }
    const std::optional<PowerSeriesTrunc> &series() const noexcept { return series_; }

  private:
    Kind kind_ = Kind::Tabulated;
    std::map<Place, LogValue> table_;
    std::optional<Pattern> pattern_;
    std::optional<PowerSeriesTrunc> series_;
};

enum class Verdict { Converges, Diverges, Inconclusive };

const char *to_string(Verdict v);

struct PartialSum {
    std::uint64_t bound;
    double sum;
};

/// Numerical check of a pattern verdict against its closed-form comparison:
/// |residual| <= margin where residual = sum(bound) - expected.
struct Comparison {
    std::string reference;
    double expected;
    double residual;
    double margin;
    bool within_margin;
};

struct ConvergenceDiagnostic {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<PartialSum> partial_sums;
    std::string rationale;
    std::optional<Comparison> comparison;
    /// Primes where a derived size could not be computed (excluded from sums).
    std::vector<std::uint64_t> refused_primes;
};

/// Sum over p of -log S_p, with partial sums at 10^2, 10^3, 10^4, 10^5 (those
/// <= prime_bound) and at prime_bound.
ConvergenceDiagnostic a_analyticity_report(const SizeRule &rule, std::uint64_t prime_bound);

/// Sum over places of log+ (1/R_v).
ConvergenceDiagnostic bombieri_report(const RadiusRule &rule, std::uint64_t prime_bound);

/// Lower bound on log S_p for a graph whose p-curvatures vanish.
LogValue grothendieck_katz_bound(std::uint64_t p, bool unramified_p_closed);

/// sum_p log p / (p (p - 1)) over all primes.
inline constexpr double kSumLogPOverPPMinus1 = 0.7553666108244271;

} // namespace adelic
