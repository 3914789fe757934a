// SPDX-License-Identifier: Apache-2.0
#include "adelic/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "adelic/error.hpp"

namespace adelic {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto &c : coeffs_)
        c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const Rational &c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational &c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational &Polynomial::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational &x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a[i] + b[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + b.scaled(-1); }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational &c) const {
    std::vector<Rational> v = coeffs_;
    for (auto &x : v)
        x *= c;
    return Polynomial(std::move(v));
}

void Polynomial::divmod(const Polynomial &a, const Polynomial &b, Polynomial &quot, Polynomial &rem) {
    if (b.is_zero())
        throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> r = a.coeffs_;
    long db = b.degree();
    std::vector<Rational> q(std::max<long>(0, a.degree() - db + 1));
    for (long i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rational f = r[i] / b.leading();
        q[i - db] = f;
        for (long j = 0; j <= db; ++j)
            r[i - db + j] -= f * b.coeffs_[j];
    }
    quot = Polynomial(std::move(q));
    rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.scaled(1 / Rational(a.leading()));
}

Polynomial Polynomial::taylor_shift(const Rational &shift) const {
    // Horner in the polynomial ring: acc = acc * (t + shift) + c
    Polynomial lin({shift, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + constant(*it);
    return acc;
}

std::vector<std::complex<double>> Polynomial::roots() const {
    long n = degree();
    if (n <= 0)
        return {};
    std::vector<std::complex<double>> monic(n + 1);
    double lead = coeffs_.back().get_d();
    for (long i = 0; i <= n; ++i)
        monic[i] = coeffs_[i].get_d() / lead;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (long i = n; i >= 0; --i)
            acc = acc * x + monic[i];
        return acc;
    };
    double bound = 0.0;
    for (long i = 0; i < n; ++i)
        bound = std::max(bound, std::abs(monic[i]));
    bound += 1.0;
    std::vector<std::complex<double>> z(n);
    const std::complex<double> seed(0.4, 0.9);
    for (long i = 0; i < n; ++i)
        z[i] = bound * std::pow(seed, static_cast<double>(i));
    for (int iter = 0; iter < 2000; ++iter) {
        double change = 0.0;
        for (long i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (long j = 0; j < n; ++j)
                if (j != i)
                    denom *= (z[i] - z[j]);
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15 * bound)
            break;
    }
    return z;
}

std::string Polynomial::to_string(const std::string &var) const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + adelic::to_string(coeffs_[i]) + ")";
        if (i >= 1)
            out += "*" + var;
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<Rational> series_quotient(const Polynomial &num, const Polynomial &den, std::size_t count) {
    if (den[0] == 0)
        throw Error(ErrorCode::InvalidArgument, "denominator vanishes at 0");
    std::vector<Rational> c(count);
    Rational inv0 = 1 / den[0];
    long dd = den.degree();
    for (std::size_t n = 0; n < count; ++n) {
        Rational acc = num[n];
        for (long j = 1; j <= dd && static_cast<std::size_t>(j) <= n; ++j)
            acc -= den.coeffs()[j] * c[n - j];
        c[n] = acc * inv0;
    }
    return c;
}

} // namespace adelic
