// SPDX-License-Identifier: Apache-2.0
#include "adelic/certifier.hpp"

#include <algorithm>
#include <cmath>

#include "adelic/equilibrium.hpp"
#include "adelic/error.hpp"
#include "adelic/padic.hpp"

namespace adelic {

namespace {

Rational determinant(std::vector<std::vector<Rational>> A) {
    std::size_t n = A.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (A[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(A[piv], A[c]);
            det = -det;
        }
        det *= A[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (A[r][c] == 0)
                continue;
            Rational f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j)
                A[r][j] -= f * A[c][j];
        }
    }
    return det;
}

// Radius of the largest disk around the base point inside the archimedean domain.
std::optional<double> inscribed_radius(const DomainShape &shape, const Rational &base) {
    double P = base.get_d();
    if (auto *d = std::get_if<ArchDisk>(&shape))
        return Rational(d->radius - abs(Rational(base - d->center))).get_d();
    if (auto *iv = std::get_if<ArchIntervalComplement>(&shape)) {
        double a = iv->a.to_double(), b = iv->b.to_double();
        return P < a ? a - P : P - b;
    }
    if (auto *cc = std::get_if<ArchCurveComplement>(&shape)) {
        double best = INFINITY;
        for (std::size_t j = 0; j + 1 < cc->vertices.size(); ++j) {
            Complex a = cc->vertices[j], d = cc->vertices[j + 1] - a;
            double t = std::clamp(std::real((Complex(P, 0) - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
            best = std::min(best, std::abs(Complex(P, 0) - (a + t * d)));
        }
        return best;
    }
    return std::nullopt;
}

std::set<std::uint64_t> small_prime_factors(Integer n) {
    std::set<std::uint64_t> out;
    if (n < 0)
        n = -n;
    for (std::uint64_t d = 2; d < 100000 && n > 1; ++d)
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.insert(d);
            while (mpz_divisible_ui_p(n.get_mpz_t(), d))
                n /= d;
        }
    if (n > 1 && n.fits_ulong_p() && is_prime(n.get_ui()))
        out.insert(n.get_ui());
    return out;
}

} // namespace

std::set<std::uint64_t> denominator_primes(const PowerSeriesTrunc &phi) {
    Integer l = 1;
    for (const auto &c : phi.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return small_prime_factors(l);
}

std::map<std::uint64_t, RadiusBound> radii_lower_bounds(const PowerSeriesTrunc &phi,
                                                        const std::set<std::uint64_t> &primes) {
    if (phi.stored_zero() && !phi.has_rule())
        throw Error(ErrorCode::ZeroSeries, "radius bounds of the zero series");
    std::map<std::uint64_t, RadiusBound> out;
    for (std::uint64_t p : primes) {
        Place place = Place::finite(p);
        if (phi.has_rule())
            if (auto rho = phi.identity()->log_radius(place)) {
                out.emplace(p, RadiusBound{*rho, Exactness::Exact});
                continue;
            }
        std::optional<Rational> best;
        for (std::size_t n = 1; n <= phi.truncation(); ++n) {
            if (phi[n] == 0)
                continue;
            Rational s = make_rational(static_cast<long>(valuation_nonzero(phi[n], p)), static_cast<long>(n));
            if (!best || s < *best)
                best = s;
        }
        out.emplace(p, RadiusBound{best ? LogValue::at_prime(p, *best) : LogValue::plus_infinity(p),
                                   Exactness::TruncationBound});
    }
    return out;
}

const char *to_string(HankelOracle::Kind k) {
    switch (k) {
    case HankelOracle::Kind::Rational: return "rational";
    case HankelOracle::Kind::NoRational: return "no-rational";
    case HankelOracle::Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

Rational hankel_determinant(const PowerSeriesTrunc &phi, std::size_t k, std::size_t n) {
    if (k + 2 * n > phi.truncation())
        throw Error(ErrorCode::TruncationTooShort, "Hankel window exceeds the truncation");
    std::vector<std::vector<Rational>> H(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            H[i][j] = phi[k + i + j];
    return determinant(std::move(H));
}

HankelOracle hankel_rationality_oracle(const PowerSeriesTrunc &phi, std::size_t k_max) {
    std::size_t N = phi.truncation();
    if (N < 2 * k_max + 2)
        throw Error(ErrorCode::TruncationTooShort,
                    "Hankel oracle needs N >= 2 k_max + 2 = " + std::to_string(2 * k_max + 2));
    HankelOracle out;
    out.k_max = k_max;
    bool unsure = false;
    for (std::size_t n = 0; n <= k_max; ++n) {
        std::optional<std::size_t> last_nonzero;
        for (std::size_t k = 0; k + 2 * n <= N; ++k)
            if (hankel_determinant(phi, k, n) != 0)
                last_nonzero = k;
        // with every window vanishing the recurrence holds from index n on
        std::size_t m = last_nonzero ? *last_nonzero + n : (n > 0 ? n - 1 : 0);
        if (m > k_max)
            continue;
        std::size_t k0 = m + 1 > n ? m + 1 - n : 0;
        std::size_t windows = N - 2 * n + 1 - k0;
        if (windows >= n + 1) {
            out.kind = HankelOracle::Kind::Rational;
            out.m = m;
            out.n = n;
            out.detail = "determinants of order " + std::to_string(n + 1) + " vanish for k = " + std::to_string(k0) +
                         ".." + std::to_string(N - 2 * n);
            return out;
        }
        unsure = true;
    }
    out.kind = unsure ? HankelOracle::Kind::Inconclusive : HankelOracle::Kind::NoRational;
    out.detail = unsure ? "vanishing pattern found with too few windows"
                        : "for every n <= " + std::to_string(k_max) + " some determinant beyond k_max is nonzero";
    return out;
}

PadeResult pade_attempt(const PowerSeriesTrunc &phi, std::size_t m, std::size_t n) {
    std::size_t N = phi.truncation();
    if (N < m + n + 1)
        throw Error(ErrorCode::TruncationTooShort, "Pade (" + std::to_string(m) + "," + std::to_string(n) +
                                                       ") needs N >= " + std::to_string(m + n + 1));
    auto c = [&](long j) { return j < 0 ? Rational(0) : phi[static_cast<std::size_t>(j)]; };
    std::vector<Rational> q(n + 1, Rational(0));
    q[0] = 1;
    if (n > 0) {
        std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
        std::vector<Rational> b(n);
        for (std::size_t r = 0; r < n; ++r) {
            long j = static_cast<long>(m + 1 + r);
            for (std::size_t l = 1; l <= n; ++l)
                A[r][l - 1] = c(j - static_cast<long>(l));
            b[r] = -c(j);
        }
        auto x = solve_linear_system(std::move(A), std::move(b));
        for (std::size_t l = 1; l <= n; ++l)
            q[l] = x[l - 1];
    }
    auto conv = [&](std::size_t j) {
        Rational s = 0;
        for (std::size_t l = 0; l <= n && l <= j; ++l)
            s += q[l] * c(static_cast<long>(j - l));
        return s;
    };
    std::vector<Rational> pc(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        pc[j] = conv(j);
    PadeResult res{Polynomial(pc), Polynomial(q), true, std::nullopt};
    for (std::size_t j = m + 1; j <= N; ++j)
        if (conv(j) != 0) {
            res.verified = false;
            res.first_mismatch = j;
            break;
        }
    return res;
}

PadeResult pade_reconstruct(const PowerSeriesTrunc &phi, std::size_t m, std::size_t n) {
    PadeResult r = pade_attempt(phi, m, n);
    if (!r.verified)
        throw Error(ErrorCode::VerificationFailure,
                    "Pade (" + std::to_string(m) + "," + std::to_string(n) + ") fails at index " +
                        std::to_string(*r.first_mismatch));
    return r;
}

const char *to_string(CertificateStatus s) {
    switch (s) {
    case CertificateStatus::CriterionSatisfied: return "criterion-satisfied";
    case CertificateStatus::CriterionNotSatisfied: return "criterion-not-satisfied";
    case CertificateStatus::InconsistentDeclaration: return "inconsistent-declaration";
    }
    return "?";
}

Certificate certify(const SeriesCase &sc) {
    Certificate cert;
    cert.meromorphy_asserted = sc.meromorphy_asserted;
    const PowerSeriesTrunc &phi = sc.phi;
    if (sc.tube.base != 0)
        throw Error(ErrorCode::InvalidArgument, "the certifier works at the base point 0");
    validate_tube(sc.tube);

    // declared finite-place domains against Newton-polygon radius bounds
    std::set<std::uint64_t> primes = denominator_primes(phi);
    for (const auto &[place, shape] : sc.tube.places)
        if (place.is_finite())
            primes.insert(place.prime());
    cert.radii_bounds = radii_lower_bounds(phi, primes);
    for (const auto &[p, bound] : cert.radii_bounds) {
        DomainSpec dom = sc.tube.domain_at(Place::finite(p));
        const auto *disk = std::get_if<PadicDisk>(&dom.shape);
        if (!disk)
            continue; // lemniscate domains are taken as declared
        LogValue declared = LogValue::at_prime(p, disk->log_radius);
        if (declared > bound.log_radius && !sc.meromorphy_asserted)
            cert.inconsistencies.push_back("p = " + std::to_string(p) + ": declared log R = " + declared.to_string() +
                                           " exceeds the Newton bound " + bound.log_radius.to_string());
    }
    // archimedean: largest disk inside the declared domain vs the radius estimate
    if (auto it = sc.tube.places.find(Place::archimedean()); it != sc.tube.places.end() && !sc.meromorphy_asserted) {
        auto inscribed = inscribed_radius(it->second, sc.tube.base);
        RadiusResult rho = log_radius_of_convergence(phi, Place::archimedean());
        double limit = rho.log_radius.is_plus_infinity() ? INFINITY : 1.1 * std::exp(rho.log_radius.to_double());
        if (inscribed && *inscribed > limit)
            cert.inconsistencies.push_back("archimedean: inscribed radius " + std::to_string(*inscribed) +
                                           " exceeds the radius of convergence estimate " + std::to_string(limit / 1.1));
    }

    cert.oracle = hankel_rationality_oracle(phi, sc.k_max);
    if (cert.oracle.kind == HankelOracle::Kind::Rational) {
        // degenerate systems: widen the numerator degree up to m + n
        std::optional<PadeResult> found;
        std::size_t n = cert.oracle.n;
        for (std::size_t m = cert.oracle.m; m <= cert.oracle.m + n && m + n + 1 <= phi.truncation(); ++m) {
            try {
                found = pade_attempt(phi, m, n);
            } catch (const Error &e) {
                if (e.code() != ErrorCode::SingularSystem)
                    throw;
                continue;
            }
            if (found->verified)
                break;
        }
        if (found) {
            PadeResult r = *found;
            cert.consistency = r.verified;
            if (r.verified) {
                Polynomial g = Polynomial::gcd(r.P, r.Q);
                if (g.degree() > 0) {
                    Polynomial rem;
                    Polynomial::divmod(r.P, g, r.P, rem);
                    Polynomial::divmod(r.Q, g, r.Q, rem);
                }
                Rational q0 = r.Q[0];
                r.P = r.P.scaled(1 / q0);
                r.Q = r.Q.scaled(1 / q0);
            }
            cert.reconstruction = r;
        }
    }

    if (!cert.inconsistencies.empty()) {
        cert.status = CertificateStatus::InconsistentDeclaration;
        return cert;
    }
    cert.adelic_degree = arakelov_degree(sc.tube);
    switch (cert.adelic_degree->sign) {
    case DegreeSign::Positive: cert.status = CertificateStatus::CriterionSatisfied; break;
    case DegreeSign::Negative: cert.status = CertificateStatus::CriterionNotSatisfied; break;
    case DegreeSign::Boundary:
        cert.status = CertificateStatus::CriterionNotSatisfied;
        cert.boundary = true;
        break;
    }
    return cert;
}

} // namespace adelic
