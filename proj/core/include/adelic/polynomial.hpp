// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "adelic/rational.hpp"

namespace adelic {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; trailing zeros are trimmed.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational &c);
    static Polynomial monomial(const Rational &c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^i (zero beyond the degree).
    Rational operator[](std::size_t i) const;
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
    const Rational &leading() const;

    Rational evaluate(const Rational &x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial scaled(const Rational &c) const;
    /// Euclidean division; divisor must be nonzero.
    static void divmod(const Polynomial &a, const Polynomial &b, Polynomial &quot, Polynomial &rem);
    /// Monic gcd (zero when both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);
    /// p(x + shift)
    Polynomial taylor_shift(const Rational &shift) const;

    /// Complex roots (Durand-Kerner); for degree <= 0 returns an empty list.
    std::vector<std::complex<double>> roots() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    std::string to_string(const std::string &var = "t") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// First `count` Taylor coefficients of num/den at 0; den(0) must be nonzero.
std::vector<Rational> series_quotient(const Polynomial &num, const Polynomial &den, std::size_t count);

} // namespace adelic
