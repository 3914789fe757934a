// SPDX-License-Identifier: Apache-2.0
#include "adelic/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adelic/error.hpp"

namespace adelic {

namespace {

std::uint64_t floor_log(std::uint64_t m, std::uint64_t p) {
    std::uint64_t k = 0;
    while (m >= p) {
        m /= p;
        ++k;
    }
    return k;
}

Rational legendre_neg(std::uint64_t m, std::uint64_t p) {
    // v_p(1/m!) = -(m - s_p(m)) / (p - 1)
    return -make_rational(static_cast<long>(m - digit_sum(m, p)), static_cast<long>(p - 1));
}

} // namespace

Rational TailBound::at(std::size_t n, std::uint64_t p) const {
    long m = static_cast<long>(n) - shift;
    Rational b = slope * m + intercept;
    if (log_coeff != 0 && m >= 1)
        b -= log_coeff * static_cast<long>(floor_log(static_cast<std::uint64_t>(m), p));
    return b;
}

SeriesIdentity SeriesIdentity::log1p(long shift) { return SeriesIdentity(Kind::Log1p, shift); }
SeriesIdentity SeriesIdentity::expm1(long shift) { return SeriesIdentity(Kind::Expm1, shift); }
SeriesIdentity SeriesIdentity::exp(long shift) { return SeriesIdentity(Kind::Exp, shift); }

SeriesIdentity SeriesIdentity::geometric(Rational a, long shift) {
    SeriesIdentity id(Kind::Geometric, shift);
    a.canonicalize();
    id.ratio_ = std::move(a);
    return id;
}

SeriesIdentity SeriesIdentity::central_binomial(long shift) {
    return SeriesIdentity(Kind::CentralBinomial, shift);
}

SeriesIdentity SeriesIdentity::rational(Polynomial num, Polynomial den, long shift) {
    if (den.is_zero() || den[0] == 0)
        throw Error(ErrorCode::InvalidArgument, "rational identity needs Q(0) != 0");
    Polynomial g = Polynomial::gcd(num, den);
    if (!num.is_zero() && g.degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(num, g, q, r);
        num = q;
        Polynomial::divmod(den, g, q, r);
        den = q;
    }
    SeriesIdentity id(Kind::RationalFunction, shift);
    id.num_ = std::move(num);
    id.den_ = std::move(den);
    return id;
}

SeriesIdentity SeriesIdentity::user(std::string label) {
    SeriesIdentity id(Kind::User, 0);
    id.label_ = std::move(label);
    return id;
}

std::string SeriesIdentity::name() const {
    switch (kind_) {
    case Kind::Log1p: return "log1p";
    case Kind::Expm1: return "expm1";
    case Kind::Exp: return "exp";
    case Kind::Geometric: return "geometric";
    case Kind::CentralBinomial: return "central-binomial";
    case Kind::RationalFunction: return "rational";
    case Kind::User: return "user";
    }
    return "user";
}

long SeriesIdentity::base_order() const {
    switch (kind_) {
    case Kind::Log1p:
    case Kind::Expm1: return 1;
    case Kind::RationalFunction: {
        long k = 0;
        while (k <= num_.degree() && num_[k] == 0)
            ++k;
        return k;
    }
    default: return 0;
    }
}

SeriesIdentity SeriesIdentity::shifted(long delta) const {
    SeriesIdentity id = *this;
    id.shift_ += delta;
    if (kind_ != Kind::User && id.shift_ < -base_order())
        throw Error(ErrorCode::InvalidArgument, "identity shift below the order of the series");
    return id;
}

std::vector<Rational> SeriesIdentity::coefficients(std::size_t count) const {
    if (!has_rule())
        throw Error(ErrorCode::InvalidArgument, "user identity has no coefficient rule");
    // base index m = n - shift; need base up to count - 1 - shift
    long top = static_cast<long>(count) - 1 - shift_;
    std::vector<Rational> base(static_cast<std::size_t>(std::max<long>(top + 1, 0)));
    switch (kind_) {
    case Kind::Log1p:
        for (long m = 1; m <= top; ++m)
            base[m] = Rational((m % 2) ? 1 : -1, m);
        break;
    case Kind::Expm1:
    case Kind::Exp: {
        Rational f = 1;
        for (long m = 0; m <= top; ++m) {
            if (m > 0)
                f /= m;
            base[m] = f;
        }
        if (kind_ == Kind::Expm1 && top >= 0)
            base[0] = 0;
        break;
    }
    case Kind::Geometric: {
        Rational f = 1;
        for (long m = 0; m <= top; ++m) {
            base[m] = f;
            f *= ratio_;
        }
        break;
    }
    case Kind::CentralBinomial: {
        Rational f = 1;
        for (long m = 0; m <= top; ++m) {
            if (m > 0)
                f = f * (2 * m) * (2 * m - 1) / (Rational(m) * m);
            base[m] = f;
        }
        break;
    }
    case Kind::RationalFunction:
        if (top >= 0)
            base = series_quotient(num_, den_, static_cast<std::size_t>(top + 1));
        break;
    case Kind::User: break;
    }
    std::vector<Rational> out(count);
    for (std::size_t n = 0; n < count; ++n) {
        long m = static_cast<long>(n) - shift_;
        if (m >= 0 && m <= top)
            out[n] = base[m];
    }
    return out;
}

std::optional<Valuation> SeriesIdentity::valuation_at(std::size_t n, std::uint64_t p) const {
    long m = static_cast<long>(n) - shift_;
    if (m < 0)
        return Valuation::infinity();
    auto as_val = [](const Rational &q) { return Valuation::of(q.get_num().get_si()); };
    switch (kind_) {
    case Kind::Log1p:
        if (m == 0)
            return Valuation::infinity();
        return Valuation::of(-valuation_nonzero(Integer(m), p));
    case Kind::Expm1:
        if (m == 0)
            return Valuation::infinity();
        return as_val(legendre_neg(static_cast<std::uint64_t>(m), p));
    case Kind::Exp: return as_val(legendre_neg(static_cast<std::uint64_t>(m), p));
    case Kind::Geometric:
        if (ratio_ == 0)
            return m == 0 ? Valuation::of(0) : Valuation::infinity();
        return Valuation::of(m * valuation_nonzero(ratio_, p));
    case Kind::CentralBinomial: {
        auto um = static_cast<std::uint64_t>(m);
        return Valuation::of(static_cast<std::int64_t>((2 * digit_sum(um, p) - digit_sum(2 * um, p)) / (p - 1)));
    }
    default: return std::nullopt;
    }
}

std::optional<TailBound> SeriesIdentity::tail_bound(std::uint64_t p) const {
    TailBound b;
    b.shift = shift_;
    switch (kind_) {
    case Kind::Log1p: b.log_coeff = 1; return b;
    case Kind::Expm1:
    case Kind::Exp:
        b.slope = -Rational(1, static_cast<long>(p - 1));
        b.intercept = Rational(1, static_cast<long>(p - 1));
        return b;
    case Kind::Geometric:
        if (ratio_ == 0) {
            b.zero_beyond = static_cast<std::size_t>(std::max<long>(shift_, 0));
            return b;
        }
        b.slope = Rational(valuation_nonzero(ratio_, p));
        return b;
    case Kind::CentralBinomial: return b;
    case Kind::RationalFunction: {
        if (num_.is_zero()) {
            b.zero_beyond = 0;
            return b;
        }
        if (den_.degree() == 0) {
            b.zero_beyond = static_cast<std::size_t>(std::max<long>(num_.degree() + shift_, 0));
            return b;
        }
        // Q(p^e Y)/q0 is p-integral with unit constant term, so the base
        // coefficients satisfy v(c_m) >= -e*m - f.
        const Rational &q0 = den_[0];
        Rational e_min;
        bool first = true;
        for (long i = 1; i <= den_.degree(); ++i) {
            if (den_[i] == 0)
                continue;
            Rational cand(-valuation_nonzero(Rational(den_[i] / q0), p), i);
            if (first || cand > e_min)
                e_min = cand;
            first = false;
        }
        Integer e = ceil(e_min);
        Integer worst = 0;
        bool have = false;
        for (long i = 0; i <= num_.degree(); ++i) {
            if (num_[i] == 0)
                continue;
            Integer v = Integer(static_cast<long>(valuation_nonzero(Rational(num_[i] / q0), p))) + e * i;
            if (!have || v < worst)
                worst = v;
            have = true;
        }
        Integer f = worst < 0 ? Integer(-worst) : Integer(0);
        b.slope = Rational(-e);
        b.intercept = Rational(-f);
        return b;
    }
    case Kind::User: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Rational> SeriesIdentity::graph_first_slope(std::uint64_t p) const {
    switch (kind_) {
    case Kind::Log1p:
    case Kind::Expm1:
        // attained at X^{p-1}: -v_p(p) / (p - 1), and v_p(m) <= (m-1)/(p-1) bounds the rest
        if (shift_ == 0)
            return -Rational(1, static_cast<long>(p - 1));
        return std::nullopt;
    case Kind::Geometric:
        if (shift_ == 1 && ratio_ != 0)
            return Rational(valuation_nonzero(ratio_, p));
        return std::nullopt;
    default: return std::nullopt;
    }
}

std::optional<LogValue> SeriesIdentity::log_radius(const Place &place) const {
    if (place.is_finite()) {
        std::uint64_t p = place.prime();
        switch (kind_) {
        case Kind::Log1p:
        case Kind::CentralBinomial: return LogValue::at_prime(p, 0);
        case Kind::Expm1:
        case Kind::Exp: return LogValue::at_prime(p, -Rational(1, static_cast<long>(p - 1)));
        case Kind::Geometric:
            if (ratio_ == 0)
                return LogValue::plus_infinity(p);
            return LogValue::at_prime(p, Rational(valuation_nonzero(ratio_, p)));
        case Kind::RationalFunction: {
            if (den_.degree() <= 0 || num_.is_zero())
                return LogValue::plus_infinity(p);
            std::int64_t v0 = valuation_nonzero(den_[0], p);
            std::optional<Rational> best;
            for (long i = 1; i <= den_.degree(); ++i) {
                if (den_[i] == 0)
                    continue;
                Rational s = make_rational(static_cast<long>(valuation_nonzero(den_[i], p) - v0), i);
                if (!best || s < *best)
                    best = s;
            }
            return LogValue::at_prime(p, *best);
        }
        case Kind::User: return std::nullopt;
        }
        return std::nullopt;
    }
    switch (kind_) {
    case Kind::Log1p: return LogValue::real(0.0);
    case Kind::Expm1:
    case Kind::Exp: return LogValue::plus_infinity();
    case Kind::Geometric:
        if (ratio_ == 0)
            return LogValue::plus_infinity();
        return LogValue::real(-log_abs(ratio_));
    case Kind::CentralBinomial: return LogValue::real(-std::log(4.0));
    case Kind::RationalFunction: {
        if (den_.degree() <= 0 || num_.is_zero())
            return LogValue::plus_infinity();
        double m = std::numeric_limits<double>::infinity();
        for (auto z : den_.roots())
            m = std::min(m, std::abs(z));
        return LogValue::real(std::log(m));
    }
    case Kind::User: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<bool> SeriesIdentity::unbounded_on_radius(std::uint64_t) const {
    switch (kind_) {
    case Kind::Log1p: return true;
    case Kind::User: return std::nullopt;
    default: return false;
    }
}

std::optional<double> SeriesIdentity::arch_majorant(double r) const {
    if (r < 0)
        return std::nullopt;
    double scale = std::pow(r, static_cast<double>(shift_));
    switch (kind_) {
    case Kind::Log1p:
        if (r >= 1)
            return std::nullopt;
        return scale * -std::log1p(-r);
    case Kind::Expm1: return scale * std::expm1(r);
    case Kind::Exp: return scale * std::exp(r);
    case Kind::Geometric: {
        double a = std::fabs(ratio_.get_d());
        if (a * r >= 1)
            return std::nullopt;
        return scale / (1 - a * r);
    }
    case Kind::CentralBinomial:
        if (4 * r >= 1)
            return std::nullopt;
        return scale / std::sqrt(1 - 4 * r);
    case Kind::RationalFunction: {
        double top = 0;
        double rp = 1;
        for (const auto &c : num_.coeffs()) {
            top += std::fabs(c.get_d()) * rp;
            rp *= r;
        }
        double bottom = std::fabs(den_.leading().get_d());
        for (auto z : den_.roots()) {
            double gap = std::abs(z) - r;
            if (gap <= 0)
                return std::nullopt;
            bottom *= gap;
        }
        return scale * top / bottom * (1 + 1e-9);
    }
    case Kind::User: return std::nullopt;
    }
    return std::nullopt;
}

PowerSeriesTrunc::PowerSeriesTrunc(std::vector<Rational> coeffs, std::optional<SeriesIdentity> identity)
    : coeffs_(std::move(coeffs)), identity_(std::move(identity)) {
    if (coeffs_.empty())
        throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
    for (auto &c : coeffs_)
        c.canonicalize();
    if (identity_ && identity_->has_rule()) {
        auto expected = identity_->coefficients(coeffs_.size());
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (expected[n] != coeffs_[n])
                throw Error(ErrorCode::IdentityMismatch,
                            "coefficient " + std::to_string(n) + " is " + to_string(coeffs_[n]) +
                                " but identity " + identity_->name() + " gives " + to_string(expected[n]));
        }
    }
}

PowerSeriesTrunc PowerSeriesTrunc::from_identity(const SeriesIdentity &id, std::size_t truncation) {
    return PowerSeriesTrunc(id.coefficients(truncation + 1), id);
}

bool PowerSeriesTrunc::stored_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

PowerSeriesTrunc PowerSeriesTrunc::divided_by_x() const {
    if (coeffs_[0] != 0)
        throw Error(ErrorCode::NotPointed, "series has nonzero constant term");
    if (coeffs_.size() < 2)
        throw Error(ErrorCode::TruncationTooShort, "cannot divide a constant truncation by X");
    std::vector<Rational> c(coeffs_.begin() + 1, coeffs_.end());
    std::optional<SeriesIdentity> id;
    if (identity_)
        id = identity_->has_rule() ? identity_->shifted(-1) : *identity_;
    return PowerSeriesTrunc(std::move(c), std::move(id));
}

PowerSeriesTrunc PowerSeriesTrunc::retruncated(std::size_t truncation) const {
    if (truncation <= this->truncation())
        return PowerSeriesTrunc(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + truncation + 1), identity_);
    if (!has_rule())
        throw Error(ErrorCode::TruncationTooShort, "cannot extend a series without a coefficient rule");
    return from_identity(*identity_, truncation);
}

std::vector<Rational> PowerSeriesTrunc::coefficients(std::size_t count) const {
    if (count <= coeffs_.size())
        return std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + count);
    if (!has_rule())
        throw Error(ErrorCode::TruncationTooShort,
                    "need " + std::to_string(count) + " coefficients, series known to order " +
                        std::to_string(truncation()));
    return identity_->coefficients(count);
}

Valuation PowerSeriesTrunc::valuation_at(std::size_t n, std::uint64_t p) const {
    if (n < coeffs_.size())
        return padic_valuation(coeffs_[n], p);
    if (!has_rule())
        throw Error(ErrorCode::TruncationTooShort, "coefficient beyond truncation");
    if (auto v = identity_->valuation_at(n, p))
        return *v;
    return padic_valuation(identity_->coefficients(n + 1)[n], p);
}

PowerSeriesTrunc operator*(const PowerSeriesTrunc &a, const PowerSeriesTrunc &b) {
    std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    return PowerSeriesTrunc(std::move(c));
}

PowerSeriesTrunc operator+(const PowerSeriesTrunc &a, const PowerSeriesTrunc &b) {
    std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = a[i] + b[i];
    return PowerSeriesTrunc(std::move(c));
}

} // namespace adelic
