// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adelic/log_value.hpp"
#include "adelic/polynomial.hpp"
#include "adelic/rational.hpp"

namespace adelic {

/// Lower bound on tail valuations:
///   v_p(c_n) >= slope * m + intercept - log_coeff * floor(log_p m),  m = n - shift >= 1.
/// `zero_beyond` marks a polynomial tail (c_n = 0 for n > zero_beyond).
struct TailBound {
    Rational slope;
    Rational intercept;
    Rational log_coeff;
    long shift = 0;
    std::optional<std::size_t> zero_beyond;

    /// The bound evaluated at index n (requires n - shift >= 1).
    Rational at(std::size_t n, std::uint64_t p) const;
};

/// Closed-form identity attached to a truncated series. The series equals
/// X^shift * base(X); the base carries the coefficient rule.
class SeriesIdentity {
  public:
    enum class Kind { Log1p, Expm1, Exp, Geometric, CentralBinomial, RationalFunction, User };

    static SeriesIdentity log1p(long shift = 0);
    static SeriesIdentity expm1(long shift = 0);
    static SeriesIdentity exp(long shift = 0);
    /// sum a^n X^n
    static SeriesIdentity geometric(Rational a, long shift = 0);
    /// sum binom(2n, n) X^n
    static SeriesIdentity central_binomial(long shift = 0);
    /// P/Q with Q(0) != 0; the pair is reduced by its gcd.
    static SeriesIdentity rational(Polynomial num, Polynomial den, long shift = 0);
    static SeriesIdentity user(std::string label);

    Kind kind() const noexcept { return kind_; }
    long shift() const noexcept { return shift_; }
    const Rational &ratio() const noexcept { return ratio_; }
    const Polynomial &numerator() const noexcept { return num_; }
    const Polynomial &denominator() const noexcept { return den_; }
    const std::string &label() const noexcept { return label_; }
    std::string name() const;

    bool has_rule() const noexcept { return kind_ != Kind::User; }
    /// Index of the first nonzero base coefficient (shift may go down to -order).
    long base_order() const;
    /// The same identity multiplied by X^delta.
    SeriesIdentity shifted(long delta) const;

    /// First `count` coefficients of X^shift * base.
    std::vector<Rational> coefficients(std::size_t count) const;
    /// Closed-form valuation of coefficient n; nullopt when no cheap rule exists.
    std::optional<Valuation> valuation_at(std::size_t n, std::uint64_t p) const;
    std::optional<TailBound> tail_bound(std::uint64_t p) const;

    /// Exact log radius of convergence at a finite place (valuation units), or
    /// a double at the archimedean place. +inf for entire series.
    std::optional<LogValue> log_radius(const Place &place) const;
    /// Gauss norm diverges on the closed disk |X| <= rho (only decided for the
    /// catalogue entries where it is known).
    std::optional<bool> unbounded_on_radius(std::uint64_t p) const;
    /// First Newton slope of (X^shift base)/X at p for the pointed catalogue
    /// entries (log1p, expm1, X * geometric) in valuation units.
    std::optional<Rational> graph_first_slope(std::uint64_t p) const;
    /// Upper bound on sup_{|t| <= r} |f(t)| at the archimedean place, r below
    /// the radius of convergence.
    std::optional<double> arch_majorant(double r) const;

  private:
    SeriesIdentity(Kind k, long shift) : kind_(k), shift_(shift) {}
    Kind kind_;
    long shift_ = 0;
    Rational ratio_;
    Polynomial num_, den_;
    std::string label_;
};

/// One-variable series over Q known up to X^N, optionally carrying a
/// catalogued identity that is checked against the stored coefficients.
class PowerSeriesTrunc {
  public:
    /// Throws InvalidArgument for an empty list, IdentityMismatch when the
    /// identity disagrees with a stored coefficient.
    explicit PowerSeriesTrunc(std::vector<Rational> coeffs,
                              std::optional<SeriesIdentity> identity = std::nullopt);
    static PowerSeriesTrunc from_identity(const SeriesIdentity &id, std::size_t truncation);

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
    const Rational &operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::optional<SeriesIdentity> &identity() const noexcept { return identity_; }
    bool has_rule() const noexcept { return identity_ && identity_->has_rule(); }

    bool stored_zero() const;
    /// phi / X; requires phi(0) = 0. Truncation drops by one.
    PowerSeriesTrunc divided_by_x() const;
    /// The same series re-expanded to a different order (needs a rule to grow).
    PowerSeriesTrunc retruncated(std::size_t truncation) const;
    /// Coefficients 0..count-1, extended through the identity rule when needed.
    std::vector<Rational> coefficients(std::size_t count) const;
    Valuation valuation_at(std::size_t n, std::uint64_t p) const;

  private:
    std::vector<Rational> coeffs_;
    std::optional<SeriesIdentity> identity_;
};

PowerSeriesTrunc operator*(const PowerSeriesTrunc &a, const PowerSeriesTrunc &b);
PowerSeriesTrunc operator+(const PowerSeriesTrunc &a, const PowerSeriesTrunc &b);

} // namespace adelic
