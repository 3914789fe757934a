// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "adelic/rational.hpp"

namespace adelic {

/// A place of Q: a verified prime p or the archimedean absolute value.
class Place {
  public:
    static Place finite(std::uint64_t p); // throws NotPrime
    static Place archimedean() { return Place(0); }

    bool is_archimedean() const noexcept { return prime_ == 0; }
    bool is_finite() const noexcept { return prime_ != 0; }
    /// 0 for the archimedean place.
    std::uint64_t prime() const noexcept { return prime_; }

    std::string label() const; // "2", "3", ..., "inf"

    friend bool operator==(const Place &, const Place &) = default;
    friend auto operator<=>(const Place &a, const Place &b) {
        // archimedean sorts last
        auto key = [](const Place &x) { return x.prime_ == 0 ? UINT64_MAX : x.prime_; };
        return key(a) <=> key(b);
    }

  private:
    explicit Place(std::uint64_t p) : prime_(p) {}
    std::uint64_t prime_;
};

/// p-adic valuation with v(0) = +infinity.
class Valuation {
  public:
    static Valuation infinity() { return Valuation(); }
    static Valuation of(std::int64_t v) { return Valuation(v); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    std::int64_t value() const { return *value_; }

    friend bool operator==(const Valuation &, const Valuation &) = default;
    friend std::strong_ordering operator<=>(const Valuation &a, const Valuation &b) {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

  private:
    Valuation() = default;
    explicit Valuation(std::int64_t v) : value_(v) {}
    std::optional<std::int64_t> value_;
};

Valuation padic_valuation(const Rational &q, std::uint64_t p);

/// A logarithmic quantity. At a finite place it is stored exactly in
/// valuation units (value = coeff * log p); at the archimedean place it is a
/// double. Both kinds admit the two infinities.
class LogValue {
  public:
    enum class Kind { PrimeMultiple, Real, PlusInfinity, MinusInfinity };

    static LogValue at_prime(std::uint64_t p, Rational coeff);
    static LogValue real(double value);
    /// `p` = 0 tags an archimedean infinity.
    static LogValue plus_infinity(std::uint64_t p = 0);
    static LogValue minus_infinity(std::uint64_t p = 0);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept {
        return kind_ == Kind::PrimeMultiple || kind_ == Kind::Real;
    }
    bool is_plus_infinity() const noexcept { return kind_ == Kind::PlusInfinity; }
    bool is_minus_infinity() const noexcept { return kind_ == Kind::MinusInfinity; }
    bool is_exact() const noexcept { return kind_ != Kind::Real; }

    /// 0 for archimedean values.
    std::uint64_t prime() const noexcept { return prime_; }
    /// Valuation-unit coefficient; only for Kind::PrimeMultiple.
    const Rational &coeff() const;
    /// Numeric value (coeff * log p, the double, or +-inf).
    double to_double() const;

    LogValue operator-() const;
    /// Same-place sum. Mixing primes throws InvalidArgument.
    friend LogValue operator+(const LogValue &a, const LogValue &b);
    friend LogValue operator-(const LogValue &a, const LogValue &b) { return a + (-b); }
    /// Scaling by a rational; scaling an infinity by zero throws.
    LogValue scaled(const Rational &factor) const;

    /// Exact at a common finite place; numeric otherwise.
    friend std::partial_ordering operator<=>(const LogValue &a, const LogValue &b);
    friend bool operator==(const LogValue &a, const LogValue &b);

    std::string to_string() const;

  private:
    LogValue(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}
    Kind kind_;
    std::uint64_t prime_ = 0;
    Rational coeff_;
    double real_ = 0.0;
};

LogValue max(const LogValue &a, const LogValue &b);
LogValue min(const LogValue &a, const LogValue &b);

/// Whether a result is exact or only a bound read off a truncation.
enum class Exactness { Exact, TruncationBound };

const char *to_string(Exactness e);

} // namespace adelic
