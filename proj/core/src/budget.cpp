// SPDX-License-Identifier: Apache-2.0
#include "adelic/budget.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "adelic/error.hpp"
#include "adelic/padic.hpp"

namespace adelic {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr std::uint64_t kCheckpoints[] = {100, 1000, 10000, 100000};

std::vector<std::uint64_t> checkpoints_for(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (auto c : kCheckpoints)
        if (c <= bound)
            out.push_back(c);
    if (out.empty() || out.back() != bound)
        out.push_back(bound);
    return out;
}

double log_p(std::uint64_t p) { return std::log(static_cast<double>(p)); }

// Runs term(p) over primes <= bound, recording the partial sums.
std::vector<PartialSum> accumulate(std::uint64_t bound, const std::function<double(std::uint64_t)> &term) {
    std::vector<PartialSum> sums;
    auto marks = checkpoints_for(bound);
    std::size_t next = 0;
    double total = 0.0;
    for (auto p : primes_up_to(bound)) {
        while (next < marks.size() && marks[next] < p)
            sums.push_back({marks[next++], total});
        total += term(p);
    }
    while (next < marks.size())
        sums.push_back({marks[next++], total});
    return sums;
}

// Closed-form comparison for sum_{p <= x} alpha * pattern(p) * log p, with
// `correction` accounting for exceptional primes.
std::optional<Comparison> pattern_comparison(const Pattern &pat, double x, double sum, double correction) {
    double a = pat.alpha.get_d();
    double lx = std::log(x);
    // sum_{p > x} log p / (p (p - 1)) <= (1 + log x) / (x - 2)
    double tail = (1.0 + lx) / (x - 2.0);
    Comparison c;
    if (pat.form == PatternForm::OverPMinus1) {
        // Mertens with explicit error (x >= 319) plus the convergent difference
        if (x < 319)
            return std::nullopt;
        c.reference = "alpha * (log x - euler_gamma)";
        c.expected = a * (lx - kEulerGamma) + correction;
        c.margin = a * (1.0 / (2.0 * lx) + tail);
    } else {
        if (x < 3)
            return std::nullopt;
        c.reference = "alpha * sum_p log p / (p (p - 1))";
        c.expected = a * kSumLogPOverPPMinus1 + correction;
        c.margin = a * tail;
    }
    c.residual = sum - c.expected;
    c.within_margin = std::fabs(c.residual) <= c.margin + 1e-12;
    return c;
}

void require_pattern(const Pattern &pat) {
    if (pat.alpha < 0)
        throw Error(ErrorCode::InvalidArgument, "pattern coefficient alpha must be >= 0");
}

// Primes dividing any denominator among the coefficients, or the numerator of
// the listed "must be unit" values. Trial division; a leftover cofactor is
// accepted only if it is a 64-bit prime.
std::optional<std::vector<std::uint64_t>> bad_primes(const std::vector<Rational> &coeffs,
                                                     const std::vector<Rational> &units) {
    std::vector<Integer> todo;
    for (const auto &c : coeffs)
        if (c.get_den() != 1)
            todo.push_back(c.get_den());
    for (const auto &u : units)
        todo.push_back(abs(u.get_num()));
    std::vector<std::uint64_t> out;
    for (Integer n : todo) {
        if (n == 0)
            return std::nullopt;
        for (std::uint64_t d = 2; d < 1000000 && n > 1; ++d) {
            if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                out.push_back(d);
                while (mpz_divisible_ui_p(n.get_mpz_t(), d))
                    n /= d;
            }
        }
        if (n > 1) {
            if (!n.fits_ulong_p() || !is_prime(n.get_ui()))
                return std::nullopt;
            out.push_back(n.get_ui());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Whether an identity is algebraic with finitely many bad primes; returns them.
std::optional<std::vector<std::uint64_t>> algebraic_bad_primes(const SeriesIdentity &id, const Rational &unit) {
    switch (id.kind()) {
    case SeriesIdentity::Kind::Geometric: return bad_primes({id.ratio()}, {unit});
    case SeriesIdentity::Kind::CentralBinomial: return bad_primes({}, {unit});
    case SeriesIdentity::Kind::RationalFunction: {
        std::vector<Rational> all;
        Rational q0 = id.denominator()[0];
        for (const auto &c : id.numerator().coeffs())
            all.push_back(c / q0);
        for (const auto &c : id.denominator().coeffs())
            all.push_back(c / q0);
        return bad_primes(all, {unit});
    }
    default: return std::nullopt;
    }
}

bool transcendental_catalogue(const SeriesIdentity &id) {
    using K = SeriesIdentity::Kind;
    return id.kind() == K::Log1p || id.kind() == K::Expm1 || id.kind() == K::Exp;
}

} // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

const char *to_string(PatternForm f) { return f == PatternForm::OverPMinus1 ? "1/(p-1)" : "1/(p(p-1))"; }

Rational Pattern::at(std::uint64_t p) const {
    long pm1 = static_cast<long>(p - 1);
    if (form == PatternForm::OverPMinus1)
        return alpha / Rational(pm1);
    return alpha / (Rational(static_cast<long>(p)) * pm1);
}

const char *to_string(Verdict v) {
    switch (v) {
    case Verdict::Converges: return "converges";
    case Verdict::Diverges: return "diverges";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

SizeRule SizeRule::tabulated(std::map<std::uint64_t, LogValue> log_sizes) {
    for (const auto &[p, v] : log_sizes) {
        if (v.kind() != LogValue::Kind::PrimeMultiple || v.prime() != p)
            throw Error(ErrorCode::InvalidArgument, "tabulated size at " + std::to_string(p) + " must be a multiple of log p");
        if (v.coeff() > 0)
            throw Error(ErrorCode::InvalidArgument, "size exceeds 1 at p = " + std::to_string(p));
    }
    SizeRule r;
    r.kind_ = Kind::Tabulated;
    r.table_ = std::move(log_sizes);
    return r;
}

SizeRule SizeRule::pattern(Pattern pat, std::map<std::uint64_t, LogValue> exceptional) {
    require_pattern(pat);
    SizeRule r = tabulated(std::move(exceptional));
    r.kind_ = Kind::Pattern;
    r.pattern_ = std::move(pat);
    return r;
}

SizeRule SizeRule::derived(PowerSeriesTrunc phi) {
    SizeRule r;
    r.kind_ = Kind::DerivedFromSeries;
    r.series_ = std::move(phi);
    return r;
}

RadiusRule RadiusRule::tabulated(std::map<Place, LogValue> log_radii) {
    for (const auto &[v, x] : log_radii) {
        bool ok = v.is_finite() ? (x.prime() == v.prime() && x.kind() != LogValue::Kind::Real)
                                : x.kind() != LogValue::Kind::PrimeMultiple;
        if (!ok)
            throw Error(ErrorCode::InvalidArgument, "radius at place " + v.label() + " has the wrong kind");
        if (x.is_minus_infinity())
            throw Error(ErrorCode::InvalidArgument, "zero radius at place " + v.label());
    }
    RadiusRule r;
    r.kind_ = Kind::Tabulated;
    r.table_ = std::move(log_radii);
    return r;
}

RadiusRule RadiusRule::pattern(Pattern pat, std::map<Place, LogValue> exceptional) {
    require_pattern(pat);
    RadiusRule r = tabulated(std::move(exceptional));
    r.kind_ = Kind::Pattern;
    r.pattern_ = std::move(pat);
    return r;
}

RadiusRule RadiusRule::derived(PowerSeriesTrunc g) {
    RadiusRule r;
    r.kind_ = Kind::DerivedFromSeries;
    r.series_ = std::move(g);
    return r;
}

ConvergenceDiagnostic a_analyticity_report(const SizeRule &rule, std::uint64_t prime_bound) {
    if (prime_bound < 2)
        throw Error(ErrorCode::InvalidArgument, "prime bound must be >= 2");
    ConvergenceDiagnostic diag;
    const auto &table = rule.table();
    auto tabulated_term = [&](std::uint64_t p) -> std::optional<double> {
        auto it = table.find(p);
        if (it == table.end())
            return std::nullopt;
        return -it->second.to_double();
    };

    switch (rule.kind()) {
    case SizeRule::Kind::Tabulated: {
        diag.partial_sums = accumulate(prime_bound, [&](std::uint64_t p) { return tabulated_term(p).value_or(0.0); });
        diag.verdict = Verdict::Converges;
        diag.rationale = "finitely many tabulated primes; S_p = 1 elsewhere";
        break;
    }
    case SizeRule::Kind::Pattern: {
        const Pattern &pat = *rule.pattern_term();
        double correction = 0.0;
        diag.partial_sums = accumulate(prime_bound, [&](std::uint64_t p) {
            double base = pat.at(p).get_d() * log_p(p);
            if (auto t = tabulated_term(p)) {
                correction += *t - base;
                return *t;
            }
            return base;
        });
        if (pat.alpha == 0) {
            diag.verdict = Verdict::Converges;
            diag.rationale = "pattern vanishes; only exceptional primes contribute";
        } else if (pat.form == PatternForm::OverPMinus1) {
            diag.verdict = Verdict::Diverges;
            diag.rationale = "alpha > 0 and sum_p log p / (p - 1) diverges (Mertens comparison)";
        } else {
            diag.verdict = Verdict::Converges;
            diag.rationale = "sum_p log p / (p (p - 1)) converges";
        }
        diag.comparison = pattern_comparison(pat, static_cast<double>(prime_bound), diag.partial_sums.back().sum, correction);
        break;
    }
    case SizeRule::Kind::DerivedFromSeries: {
        const PowerSeriesTrunc &phi = *rule.series();
        bool matches_pattern = phi.has_rule() && transcendental_catalogue(*phi.identity());
        diag.partial_sums = accumulate(prime_bound, [&](std::uint64_t p) {
            try {
                SizeResult s = size_of_graph(phi, p);
                if (s.exactness != Exactness::Exact || s.log_size.coeff() != -Rational(1, static_cast<long>(p - 1)))
                    matches_pattern = false;
                return -s.log_size.to_double();
            } catch (const Error &) {
                diag.refused_primes.push_back(p);
                matches_pattern = false;
                return 0.0;
            }
        });
        std::optional<std::vector<std::uint64_t>> bad;
        if (phi.has_rule() && phi.truncation() >= 1)
            bad = algebraic_bad_primes(*phi.identity(), phi[1]);
        if (matches_pattern) {
            diag.verdict = Verdict::Diverges;
            diag.rationale = "identity gives S_p = p^(-1/(p-1)) exactly at every prime; pattern 1/(p-1) diverges";
            diag.comparison = pattern_comparison({Rational(1), PatternForm::OverPMinus1}, static_cast<double>(prime_bound),
                                                 diag.partial_sums.back().sum, 0.0);
        } else if (bad) {
            diag.verdict = Verdict::Converges;
            std::string list;
            for (auto p : *bad)
                list += (list.empty() ? "" : ",") + std::to_string(p);
            diag.rationale = "algebraic identity with p-integral coefficients and unit derivative outside {" + list +
                             "}: S_p = 1 there";
        } else {
            diag.verdict = Verdict::Inconclusive;
            diag.rationale = "derived sizes are truncation data; no catalogued comparison applies";
        }
        break;
    }
    }
    return diag;
}

ConvergenceDiagnostic bombieri_report(const RadiusRule &rule, std::uint64_t prime_bound) {
    if (prime_bound < 2)
        throw Error(ErrorCode::InvalidArgument, "prime bound must be >= 2");
    ConvergenceDiagnostic diag;
    auto log_plus_inverse = [](const LogValue &log_r) {
        if (log_r.is_plus_infinity())
            return 0.0;
        return std::max(0.0, -log_r.to_double());
    };
    const auto &table = rule.table();
    auto arch_term = [&]() -> double {
        auto it = table.find(Place::archimedean());
        return it == table.end() ? 0.0 : log_plus_inverse(it->second);
    };
    auto finite_entry = [&](std::uint64_t p) -> std::optional<double> {
        auto it = table.find(Place::finite(p));
        if (it == table.end())
            return std::nullopt;
        return log_plus_inverse(it->second);
    };
    auto add_constant = [](std::vector<PartialSum> &sums, double c) {
        for (auto &s : sums)
            s.sum += c;
    };

    switch (rule.kind()) {
    case RadiusRule::Kind::Tabulated: {
        diag.partial_sums = accumulate(prime_bound, [&](std::uint64_t p) { return finite_entry(p).value_or(0.0); });
        add_constant(diag.partial_sums, arch_term());
        diag.verdict = Verdict::Converges;
        diag.rationale = "finitely many tabulated places; R_v = 1 elsewhere";
        break;
    }
    case RadiusRule::Kind::Pattern: {
        const Pattern &pat = *rule.pattern_term();
        double correction = arch_term();
        diag.partial_sums = accumulate(prime_bound, [&](std::uint64_t p) {
            double base = pat.at(p).get_d() * log_p(p);
            if (auto t = finite_entry(p)) {
                correction += *t - base;
                return *t;
            }
            return base;
        });
        add_constant(diag.partial_sums, arch_term());
        if (pat.alpha == 0) {
            diag.verdict = Verdict::Converges;
            diag.rationale = "pattern vanishes; only exceptional places contribute";
        } else if (pat.form == PatternForm::OverPMinus1) {
            diag.verdict = Verdict::Diverges;
            diag.rationale = "alpha > 0 and sum_p log p / (p - 1) diverges (Mertens comparison)";
        } else {
            diag.verdict = Verdict::Converges;
            diag.rationale = "sum_p log p / (p (p - 1)) converges";
        }
        diag.comparison = pattern_comparison(pat, static_cast<double>(prime_bound), diag.partial_sums.back().sum, correction);
        break;
    }
    case RadiusRule::Kind::DerivedFromSeries: {
        const PowerSeriesTrunc &g = *rule.series();
        bool exact_everywhere = g.has_rule();
        bool matches_pattern = g.has_rule() && transcendental_catalogue(*g.identity());
        diag.partial_sums = accumulate(prime_bound, [&](std::uint64_t p) {
            RadiusResult r = log_radius_of_convergence(g, Place::finite(p));
            if (r.exactness != Exactness::Exact)
                exact_everywhere = false;
            if (!r.log_radius.is_finite() || r.log_radius.coeff() != -Rational(1, static_cast<long>(p - 1)))
                matches_pattern = false;
            return log_plus_inverse(r.log_radius);
        });
        RadiusResult arch = log_radius_of_convergence(g, Place::archimedean());
        double arch_plus = log_plus_inverse(arch.log_radius);
        add_constant(diag.partial_sums, arch_plus);
        using K = SeriesIdentity::Kind;
        if (matches_pattern) {
            diag.verdict = Verdict::Diverges;
            diag.rationale = "identity gives R_p = p^(-1/(p-1)) at every prime; pattern 1/(p-1) diverges";
            diag.comparison = pattern_comparison({Rational(1), PatternForm::OverPMinus1}, static_cast<double>(prime_bound),
                                                 diag.partial_sums.back().sum, arch_plus);
        } else if (exact_everywhere && g.identity()->kind() == K::Log1p) {
            diag.verdict = Verdict::Converges;
            diag.rationale = "identity gives R_v = 1 at every place";
        } else if (exact_everywhere && algebraic_bad_primes(*g.identity(), Rational(1))) {
            diag.verdict = Verdict::Converges;
            diag.rationale = "algebraic identity: R_p >= 1 outside the finitely many primes of its denominators";
        } else {
            diag.verdict = Verdict::Inconclusive;
            diag.rationale = "radii are truncation data; no catalogued comparison applies";
        }
        break;
    }
    }
    return diag;
}

LogValue grothendieck_katz_bound(std::uint64_t p, bool unramified_p_closed) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    Pattern pat{Rational(1), unramified_p_closed ? PatternForm::OverPTimesPMinus1 : PatternForm::OverPMinus1};
    return LogValue::at_prime(p, -pat.at(p));
}

} // namespace adelic
