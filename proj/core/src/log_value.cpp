// SPDX-License-Identifier: Apache-2.0
#include "adelic/log_value.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "adelic/error.hpp"

namespace adelic {

Place Place::finite(std::uint64_t p) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return Place(p);
}

std::string Place::label() const { return prime_ == 0 ? "inf" : std::to_string(prime_); }

Valuation padic_valuation(const Rational &q, std::uint64_t p) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (q == 0)
        return Valuation::infinity();
    return Valuation::of(valuation_nonzero(q, p));
}

LogValue LogValue::at_prime(std::uint64_t p, Rational coeff) {
    if (p == 0)
        throw Error(ErrorCode::InvalidArgument, "prime multiple needs a prime");
    LogValue v(Kind::PrimeMultiple, p);
    coeff.canonicalize();
    v.coeff_ = std::move(coeff);
    return v;
}

LogValue LogValue::real(double value) {
    if (std::isnan(value))
        throw Error(ErrorCode::InvalidArgument, "NaN log value");
    if (std::isinf(value))
        return value > 0 ? plus_infinity() : minus_infinity();
    LogValue v(Kind::Real, 0);
    v.real_ = value;
    return v;
}

LogValue LogValue::plus_infinity(std::uint64_t p) { return LogValue(Kind::PlusInfinity, p); }
LogValue LogValue::minus_infinity(std::uint64_t p) { return LogValue(Kind::MinusInfinity, p); }

const Rational &LogValue::coeff() const {
    if (kind_ != Kind::PrimeMultiple)
        throw Error(ErrorCode::InvalidArgument, "log value has no valuation-unit coefficient");
    return coeff_;
}

double LogValue::to_double() const {
    switch (kind_) {
    case Kind::PrimeMultiple: return coeff_.get_d() * std::log(static_cast<double>(prime_));
    case Kind::Real: return real_;
    case Kind::PlusInfinity: return std::numeric_limits<double>::infinity();
    case Kind::MinusInfinity: return -std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

LogValue LogValue::operator-() const {
    switch (kind_) {
    case Kind::PrimeMultiple: return at_prime(prime_, -coeff_);
    case Kind::Real: return real(-real_);
    case Kind::PlusInfinity: return minus_infinity(prime_);
    case Kind::MinusInfinity: return plus_infinity(prime_);
    }
    return *this;
}

LogValue operator+(const LogValue &a, const LogValue &b) {
    using K = LogValue::Kind;
    if (a.prime_ != 0 && b.prime_ != 0 && a.prime_ != b.prime_)
        throw Error(ErrorCode::InvalidArgument, "adding log values at different places");
    bool a_inf = !a.is_finite(), b_inf = !b.is_finite();
    if (a_inf || b_inf) {
        if (a_inf && b_inf && a.kind_ != b.kind_)
            throw Error(ErrorCode::InvalidArgument, "+inf + -inf is undefined");
        return a_inf ? a : b;
    }
    if (a.kind_ == K::PrimeMultiple && b.kind_ == K::PrimeMultiple)
        return LogValue::at_prime(a.prime_, a.coeff_ + b.coeff_);
    return LogValue::real(a.to_double() + b.to_double());
}

LogValue LogValue::scaled(const Rational &factor) const {
    if (!is_finite()) {
        if (factor == 0)
            throw Error(ErrorCode::InvalidArgument, "0 * infinity");
        return factor > 0 ? *this : -*this;
    }
    if (kind_ == Kind::PrimeMultiple)
        return at_prime(prime_, coeff_ * factor);
    return real(real_ * factor.get_d());
}

std::partial_ordering operator<=>(const LogValue &a, const LogValue &b) {
    using K = LogValue::Kind;
    if (a.kind_ == K::PrimeMultiple && b.kind_ == K::PrimeMultiple && a.prime_ == b.prime_) {
        int c = cmp(a.coeff_, b.coeff_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }
    auto rank = [](const LogValue &x) {
        return x.kind_ == K::MinusInfinity ? -1 : (x.kind_ == K::PlusInfinity ? 1 : 0);
    };
    if (rank(a) != 0 || rank(b) != 0)
        return rank(a) <=> rank(b);
    return a.to_double() <=> b.to_double();
}

bool operator==(const LogValue &a, const LogValue &b) {
    return (a <=> b) == std::partial_ordering::equivalent;
}

LogValue max(const LogValue &a, const LogValue &b) { return (a < b) ? b : a; }
LogValue min(const LogValue &a, const LogValue &b) { return (b < a) ? b : a; }

std::string LogValue::to_string() const {
    switch (kind_) {
    case Kind::PrimeMultiple:
        return "(" + adelic::to_string(coeff_) + ")*log(" + std::to_string(prime_) + ")";
    case Kind::Real: {
        std::ostringstream os;
        os.precision(17);
        os << real_;
        return os.str();
    }
    case Kind::PlusInfinity: return "+inf";
    case Kind::MinusInfinity: return "-inf";
    }
    return "";
}

const char *to_string(Exactness e) {
    return e == Exactness::Exact ? "exact" : "truncation-bound";
}

} // namespace adelic
