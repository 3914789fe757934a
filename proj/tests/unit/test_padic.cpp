// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <random>

#include "adelic/error.hpp"
#include "adelic/padic.hpp"
#include "oracles.hpp"

using namespace adelic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PowerSeriesTrunc exp_series(std::size_t N) { return PowerSeriesTrunc::from_identity(SeriesIdentity::exp(), N); }

PowerSeriesTrunc series(std::vector<Rational> c) { return PowerSeriesTrunc(std::move(c)); }

} // namespace

TEST_CASE("valuations") {
    CHECK(padic_valuation(q(12), 2) == Valuation::of(2));
    CHECK(padic_valuation(q(1, 9), 3) == Valuation::of(-2));
    CHECK(padic_valuation(q(0), 5).is_infinite());
    CHECK_THROWS_AS(padic_valuation(q(3), 4), Error);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (int k = 0; k < 300; ++k) {
        Rational a(d(rng), std::abs(d(rng)) + 1), b(d(rng), std::abs(d(rng)) + 1);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            auto va = oracle::valuation(a, p), vb = oracle::valuation(b, p);
            CHECK(padic_valuation(a, p) == (va ? Valuation::of(*va) : Valuation::infinity()));
            if (va && vb) {
                CHECK(padic_valuation(a * b, p).value() == *va + *vb);
                Rational s = a + b;
                if (s != 0)
                    CHECK(padic_valuation(s, p).value() >= std::min(*va, *vb));
            }
        }
    }
}

TEST_CASE("log values compare exactly at a finite place") {
    LogValue a = LogValue::at_prime(3, q(-1, 2)), b = LogValue::at_prime(3, q(-1, 3));
    CHECK(a < b);
    CHECK((a + b) == LogValue::at_prime(3, q(-5, 6)));
    CHECK(LogValue::minus_infinity(3) < a);
    CHECK(a.scaled(q(2)) == LogValue::at_prime(3, q(-1)));
    CHECK_THROWS_AS((void)(a + LogValue::at_prime(5, q(1))), Error);
}

TEST_CASE("gauss norm") {
    SUBCASE("1 + pX at r = 1") {
        auto g = gauss_log_norm(series({q(1), q(5)}), 5, q(0));
        CHECK(g.log_norm == LogValue::at_prime(5, q(0)));
    }
    SUBCASE("X/p at r = 1") {
        auto g = gauss_log_norm(series({q(0), q(1, 7)}), 7, q(0));
        CHECK(g.log_norm == LogValue::at_prime(7, q(1)));
    }
    SUBCASE("exp is unbounded on the closed unit ball at 2") {
        auto g = gauss_log_norm(exp_series(60), 2, q(0));
        CHECK(g.log_norm.is_plus_infinity());
        CHECK(g.exactness == Exactness::Exact);
    }
    SUBCASE("exp on a ball strictly inside the radius is bounded") {
        // rho = 2^{-1}; r = 2^{-2}: sup_n (-2n + v_2(n!)) = 0 at n = 0
        auto g = gauss_log_norm(exp_series(60), 2, q(-2));
        CHECK(g.log_norm == LogValue::at_prime(2, q(0)));
        CHECK(g.exactness == Exactness::Exact);
    }
    SUBCASE("ultrametric on random truncations") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> d(-40, 40);
        for (int k = 0; k < 50; ++k) {
            std::vector<Rational> a(9), b(9), s(9);
            for (int i = 0; i < 9; ++i) {
                a[i] = Rational(d(rng), 1 + std::abs(d(rng)));
                b[i] = Rational(d(rng), 1 + std::abs(d(rng)));
                s[i] = a[i] + b[i];
            }
            if (a[0] == 0 || b[0] == 0 || s[0] == 0)
                continue;
            for (long lr : {-1L, 0L, 1L}) {
                auto ga = gauss_log_norm(series(a), 3, q(lr)).log_norm;
                auto gb = gauss_log_norm(series(b), 3, q(lr)).log_norm;
                auto gs = gauss_log_norm(series(s), 3, q(lr)).log_norm;
                CHECK(gs <= max(ga, gb));
            }
        }
    }
}

TEST_CASE("newton polygon") {
    SUBCASE("log(1+X)/X at 3") {
        auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 201);
        auto np = newton_polygon(phi.divided_by_x(), 3);
        REQUIRE(np.first_slope());
        CHECK(*np.first_slope() == q(-1, 2));
        CHECK(np.first_slope_certified());
        // oracle: min over i of -v_3(i+1)/i
        Rational best = 0;
        for (long i = 1; i <= 200; ++i) {
            Rational s(-*oracle::valuation(Rational(i + 1), 3), i);
            if (s < best)
                best = s;
        }
        CHECK(best == q(-1, 2));
    }
    SUBCASE("1 + X") {
        auto np = newton_polygon(series({q(1), q(1)}), 2);
        REQUIRE(np.slopes.size() == 1);
        CHECK(np.slopes[0] == 0);
    }
    SUBCASE("exp against Legendre and gift wrapping") {
        for (std::uint64_t p : {2, 3, 5}) {
            auto np = newton_polygon(exp_series(120), p);
            std::vector<std::pair<std::size_t, Rational>> pts;
            for (std::size_t n = 0; n <= 120; ++n)
                pts.emplace_back(n, Rational(-oracle::legendre(n, p)));
            auto hull = oracle::lower_hull(pts);
            REQUIRE(hull.size() == np.vertices.size());
            for (std::size_t k = 0; k < hull.size(); ++k) {
                CHECK(np.vertices[k].index == hull[k].first);
                CHECK(np.vertices[k].valuation == hull[k].second);
            }
            for (std::size_t k = 1; k < np.slopes.size(); ++k)
                CHECK(np.slopes[k - 1] <= np.slopes[k]);
        }
    }
    SUBCASE("zero series") { CHECK_THROWS_AS(newton_polygon(series({q(0), q(0)}), 2), Error); }
}

TEST_CASE("size of graphs") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        auto s = size_of_graph(PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 200), p);
        CHECK(s.log_size == LogValue::at_prime(p, Rational(-1, static_cast<long>(p - 1))));
        CHECK(s.exactness == Exactness::Exact);
    }
    SUBCASE("X/(1-X) has size 1") {
        auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::geometric(q(1), 1), 30);
        for (std::uint64_t p : {2, 3, 5}) {
            auto s = size_of_graph(phi, p);
            CHECK(s.log_size == LogValue::at_prime(p, q(0)));
        }
    }
    SUBCASE("errors") {
        auto bad = series({q(0), q(3), q(1)});
        try {
            size_of_graph(bad, 3);
            FAIL("expected DerivativeNotUnit");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::DerivativeNotUnit);
        }
        try {
            size_of_graph(series({q(1), q(1)}), 3);
            FAIL("expected NotPointed");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::NotPointed);
        }
    }
    SUBCASE("0 < S <= 1 on random pointed series") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> d(-30, 30);
        for (int k = 0; k < 60; ++k) {
            std::vector<Rational> c(12);
            c[1] = 1;
            for (int i = 2; i < 12; ++i)
                c[i] = Rational(d(rng), 1 + std::abs(d(rng)));
            auto s = size_of_graph(series(c), 2);
            CHECK(s.log_size.is_finite());
            CHECK(s.log_size <= LogValue::at_prime(2, q(0)));
            if (s.first_slope && *s.first_slope >= 0)
                CHECK(s.log_size == LogValue::at_prime(2, q(0)));
        }
    }
}

TEST_CASE("radius of convergence") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        auto r = log_radius_of_convergence(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 50), Place::finite(p));
        CHECK(r.log_radius == LogValue::at_prime(p, Rational(-1, static_cast<long>(p - 1))));
        CHECK(r.exactness == Exactness::Exact);
    }
    auto cb = log_radius_of_convergence(PowerSeriesTrunc::from_identity(SeriesIdentity::central_binomial(), 200),
                                        Place::archimedean());
    CHECK(cb.log_radius.to_double() == doctest::Approx(-std::log(4.0)).epsilon(1e-2));
    auto tagged = PowerSeriesTrunc::from_identity(
        SeriesIdentity::rational(Polynomial({q(1), q(2), q(3)}), Polynomial::constant(1)), 5);
    for (Place v : {Place::finite(2), Place::archimedean()}) {
        auto poly = log_radius_of_convergence(tagged, v);
        CHECK(poly.log_radius.is_plus_infinity());
        CHECK(poly.exactness == Exactness::Exact);
    }
    CHECK_THROWS_AS(log_radius_of_convergence(series({q(0), q(0)}), Place::finite(2)), Error);
}

TEST_CASE("radius dominates size") {
    SUBCASE("expm1 equality") {
        for (std::uint64_t p : {2, 3, 5}) {
            auto r = check_size_radius_inequality(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 80), p);
            CHECK(r.holds);
            CHECK(r.equality);
            CHECK(r.exact);
        }
    }
    SUBCASE("X/(1-X) at 3") {
        auto r = check_size_radius_inequality(PowerSeriesTrunc::from_identity(SeriesIdentity::geometric(q(1), 1), 30), 3);
        CHECK(r.holds);
        CHECK(r.radius.log_radius == LogValue::at_prime(3, q(0)));
        CHECK(r.size.log_size == LogValue::at_prime(3, q(0)));
    }
    SUBCASE("log(1+X): radius 1, size p^{-1/(p-1)}") {
        auto r = check_size_radius_inequality(PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 80), 2);
        CHECK(r.holds);
        CHECK(r.exact);
        CHECK(r.radius.log_radius == LogValue::at_prime(2, q(0)));
        CHECK(r.size.log_size == LogValue::at_prime(2, q(-1)));
    }
}

TEST_CASE("identity tags are checked against the coefficients") {
    auto c = SeriesIdentity::log1p().coefficients(6);
    c[4] += 1;
    CHECK_THROWS_AS(PowerSeriesTrunc(c, SeriesIdentity::log1p()), Error);
}
