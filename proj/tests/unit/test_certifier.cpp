// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <random>

#include "adelic/certifier.hpp"
#include "adelic/error.hpp"
#include "oracles.hpp"

using namespace adelic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PowerSeriesTrunc geometric(const Rational &a, std::size_t N) {
    return PowerSeriesTrunc::from_identity(SeriesIdentity::geometric(a), N);
}

PowerSeriesTrunc central_binomial(std::size_t N) {
    return PowerSeriesTrunc::from_identity(SeriesIdentity::central_binomial(), N);
}

// Coefficients only, no identity tag.
PowerSeriesTrunc untagged(const PowerSeriesTrunc &phi) {
    std::vector<Rational> c;
    for (std::size_t n = 0; n <= phi.truncation(); ++n)
        c.push_back(phi[n]);
    return PowerSeriesTrunc(c);
}

AdelicTube arch_disk(const Rational &radius) {
    AdelicTube t;
    t.places.emplace(Place::archimedean(), ArchDisk{q(0), radius});
    return t;
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("radii lower bounds") {
    auto cb = radii_lower_bounds(untagged(central_binomial(30)), {2, 3, 5, 7});
    for (const auto &[p, b] : cb)
        CHECK(b.log_radius.coeff() >= 0);
    auto half = radii_lower_bounds(untagged(geometric(q(1, 2), 20)), {2, 3});
    CHECK(half.at(2).log_radius == LogValue::at_prime(2, q(-1)));
    CHECK(half.at(2).exactness == Exactness::TruncationBound);
    CHECK(half.at(3).log_radius.coeff() >= 0);
    auto tagged = radii_lower_bounds(geometric(q(1, 2), 20), {2});
    CHECK(tagged.at(2).exactness == Exactness::Exact);
    CHECK(tagged.at(2).log_radius == LogValue::at_prime(2, q(-1)));
    CHECK(denominator_primes(untagged(PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 10))) ==
          std::set<std::uint64_t>{2, 3, 5, 7});
    CHECK(code_of([] { radii_lower_bounds(PowerSeriesTrunc(std::vector<Rational>(5, Rational(0))), {2}); }) ==
          ErrorCode::ZeroSeries);
}

TEST_CASE("hankel determinants against the Leibniz oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<Rational> c(14);
    for (auto &x : c)
        x = make_rational(d(rng), 1 + std::abs(d(rng)));
    PowerSeriesTrunc phi(c);
    for (std::size_t n = 0; n <= 4; ++n)
        for (std::size_t k = 0; k + 2 * n <= 13; k += 3) {
            std::vector<std::vector<Rational>> H(n + 1, std::vector<Rational>(n + 1));
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j)
                    H[i][j] = c[k + i + j];
            CHECK(hankel_determinant(phi, k, n) == oracle::determinant(H));
        }
}

TEST_CASE("hankel oracle") {
    auto g = hankel_rationality_oracle(geometric(q(1), 20), 8);
    CHECK(g.kind == HankelOracle::Kind::Rational);
    CHECK(g.m == 0);
    CHECK(g.n == 1);
    auto poly = hankel_rationality_oracle(PowerSeriesTrunc({q(1), q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0)}), 3);
    CHECK(poly.kind == HankelOracle::Kind::Rational);
    CHECK(poly.n == 0);
    CHECK(poly.m == 1);
    auto e = hankel_rationality_oracle(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 40), 8);
    CHECK(e.kind == HankelOracle::Kind::NoRational);
    auto fib = hankel_rationality_oracle(
        PowerSeriesTrunc::from_identity(SeriesIdentity::rational(Polynomial({q(0), q(1)}), Polynomial({q(1), q(-1), q(-1)})), 24),
        8);
    CHECK(fib.kind == HankelOracle::Kind::Rational);
    CHECK(fib.n == 2);
    CHECK(fib.m == 1);
    CHECK(code_of([] { hankel_rationality_oracle(geometric(q(1), 10), 8); }) == ErrorCode::TruncationTooShort);
}

TEST_CASE("pade reconstruction") {
    auto g = pade_reconstruct(geometric(q(1), 20), 0, 1);
    CHECK(g.verified);
    CHECK(g.P == Polynomial::constant(q(1)));
    CHECK(g.Q == Polynomial({q(1), q(-1)}));
    auto h = pade_reconstruct(geometric(q(1, 2), 20), 0, 1);
    CHECK(h.Q == Polynomial({q(1), q(-1, 2)}));
    auto e = pade_attempt(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 20), 2, 2);
    CHECK(!e.verified);
    REQUIRE(e.first_mismatch);
    CHECK(*e.first_mismatch <= 10);
    CHECK(code_of([] { pade_reconstruct(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 20), 2, 2); }) ==
          ErrorCode::VerificationFailure);
    CHECK(code_of([] { pade_attempt(geometric(q(1), 3), 2, 2); }) == ErrorCode::TruncationTooShort);
    SUBCASE("accepted reconstructions reproduce every coefficient") {
        auto phi = geometric(q(3, 5), 30);
        auto r = pade_reconstruct(phi, 0, 1);
        auto prod = r.Q.coeffs();
        for (std::size_t n = 0; n <= 30; ++n) {
            Rational s = 0;
            for (std::size_t l = 0; l < prod.size() && l <= n; ++l)
                s += prod[l] * phi[n - l];
            CHECK(s == (n == 0 ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("certify") {
    SUBCASE("geometric with an archimedean disk of radius 4") {
        auto c = certify({geometric(q(1), 30), arch_disk(q(4)), true});
        CHECK(c.status == CertificateStatus::CriterionSatisfied);
        REQUIRE(c.adelic_degree);
        CHECK(c.adelic_degree->total == doctest::Approx(std::log(4.0)));
        CHECK(c.oracle.kind == HankelOracle::Kind::Rational);
        REQUIRE(c.reconstruction);
        CHECK(c.reconstruction->Q == Polynomial({q(1), q(-1)}));
        CHECK(c.consistency);
        CHECK(c.meromorphy_asserted);
    }
    SUBCASE("central binomial with radius 1/4") {
        auto c = certify({central_binomial(40), arch_disk(q(1, 4))});
        CHECK(c.status == CertificateStatus::CriterionNotSatisfied);
        CHECK(c.adelic_degree->total == doctest::Approx(-std::log(4.0)));
        CHECK(c.oracle.kind == HankelOracle::Kind::NoRational);
        CHECK(c.oracle.k_max == 8);
        CHECK(!c.reconstruction);
    }
    SUBCASE("overdeclared radius at 2") {
        AdelicTube t;
        t.places.emplace(Place::finite(2), PadicDisk{q(0), q(2)});
        auto c = certify({untagged(geometric(q(1, 2), 30)), t});
        CHECK(c.status == CertificateStatus::InconsistentDeclaration);
        CHECK(!c.inconsistencies.empty());
        auto asserted = certify({untagged(geometric(q(1, 2), 30)), t, true});
        CHECK(asserted.status != CertificateStatus::InconsistentDeclaration);
    }
    SUBCASE("boundary") {
        auto c = certify({geometric(q(1), 30), AdelicTube{}});
        CHECK(c.status == CertificateStatus::CriterionNotSatisfied);
        CHECK(c.boundary);
        // one-directional: the oracle still finds the rational function
        CHECK(c.oracle.kind == HankelOracle::Kind::Rational);
    }
    SUBCASE("base point must be 0") {
        AdelicTube t;
        t.base = q(1);
        CHECK_THROWS_AS(certify({geometric(q(1), 30), t}), Error);
    }
    SUBCASE("scaling one radius shifts the degree by its log") {
        auto a = certify({geometric(q(1), 30), arch_disk(q(2)), true});
        auto b = certify({geometric(q(1), 30), arch_disk(q(6)), true});
        CHECK(b.adelic_degree->total - a.adelic_degree->total == doctest::Approx(std::log(3.0)));
    }
}

TEST_CASE("soundness on catalogue inputs") {
    // rational germs: meromorphy on every disk is a true assertion
    std::vector<PowerSeriesTrunc> rational = {
        geometric(q(1), 30),
        geometric(q(2), 30),
        geometric(q(1, 3), 30),
        PowerSeriesTrunc::from_identity(SeriesIdentity::rational(Polynomial({q(0), q(1)}), Polynomial({q(1), q(-1), q(-1)})), 30),
        PowerSeriesTrunc::from_identity(SeriesIdentity::rational(Polynomial({q(2), q(0), q(1)}), Polynomial({q(1), q(0), q(-4)})), 30),
    };
    for (const auto &phi : rational)
        for (long r : {1, 3, 8}) {
            auto c = certify({phi, arch_disk(q(r)), true});
            if (c.status == CertificateStatus::CriterionSatisfied) {
                CHECK(c.oracle.kind == HankelOracle::Kind::Rational);
                CHECK(c.consistency);
            }
            if (c.oracle.kind == HankelOracle::Kind::Rational) {
                REQUIRE(c.reconstruction);
                CHECK(c.reconstruction->verified);
            }
        }
    // transcendental germs without the flag: large disks are rejected
    auto small = certify({central_binomial(30), arch_disk(q(1, 8))});
    CHECK(small.status == CertificateStatus::CriterionNotSatisfied);
    CHECK(small.oracle.kind != HankelOracle::Kind::Rational);
    // expm1 has p-adic radius p^{-1/(p-1)} < 1, so the default unit disks overdeclare
    auto e = certify({PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 30), arch_disk(q(1, 8))});
    CHECK(e.status == CertificateStatus::InconsistentDeclaration);
    CHECK(e.oracle.kind != HankelOracle::Kind::Rational);
    auto cb = certify({central_binomial(30), arch_disk(q(3))});
    CHECK(cb.status == CertificateStatus::InconsistentDeclaration);
}
