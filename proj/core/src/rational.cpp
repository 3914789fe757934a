// SPDX-License-Identifier: Apache-2.0
#include "adelic/rational.hpp"

#include <cctype>
#include <cmath>

#include "adelic/error.hpp"

namespace adelic {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw Error(ErrorCode::ParseError, "malformed integer '" + std::string(s) + "'");
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text) && !(den_text.size() > 1 && den_text.front() == '-'))
            throw Error(ErrorCode::ParseError, "malformed denominator in '" + std::string(text) + "'");
        Integer den = parse_integer(den_text);
        if (den == 0)
            throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
            whole.remove_prefix(1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw Error(ErrorCode::ParseError, "malformed decimal '" + std::string(text) + "'");
        Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational q(neg ? Integer(-num) : num, den);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Integer &z) { return z.get_str(10); }

std::string to_string(const Rational &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

double log_abs(const Integer &z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational &q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

double to_double(const Rational &q) { return q.get_d(); }

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0)
            return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::int64_t valuation_nonzero(const Integer &z, std::uint64_t p) {
    Integer pz(static_cast<unsigned long>(p));
    Integer rest;
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

std::int64_t valuation_nonzero(const Rational &q, std::uint64_t p) {
    return valuation_nonzero(q.get_num(), p) - valuation_nonzero(q.get_den(), p);
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
    std::uint64_t s = 0;
    while (n) {
        s += n % p;
        n /= p;
    }
    return s;
}

Integer floor(const Rational &q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational &q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

} // namespace adelic
