// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "adelic/capacity.hpp"
#include "adelic/error.hpp"
#include "oracles.hpp"

using namespace adelic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

// a / t^m
Lemniscate monomial_lemniscate(const Rational &a, unsigned m) {
    return {Polynomial::constant(a), Polynomial::monomial(Rational(1), m), Rational(0), m};
}

AdelicTube tube_with(std::initializer_list<std::pair<Place, DomainShape>> entries) {
    AdelicTube t;
    for (const auto &[v, s] : entries)
        t.places.emplace(v, s);
    return t;
}

} // namespace

TEST_CASE("disk norms") {
    CHECK(cap_log_norm_disk(LogValue::at_prime(2, q(0))) == LogValue::at_prime(2, q(0)));
    CHECK(cap_log_norm_disk(LogValue::at_prime(2, q(-1))) == LogValue::at_prime(2, q(1)));
    CHECK(cap_log_norm_disk(LogValue::real(std::log(4.0))).to_double() == doctest::Approx(-std::log(4.0)));
}

TEST_CASE("lemniscate norms") {
    CHECK(cap_log_norm_lemniscate(monomial_lemniscate(q(1), 1), Place::finite(3)) == LogValue::at_prime(3, q(0)));
    // |4|_2^{-1/2} = 2
    CHECK(cap_log_norm_lemniscate(monomial_lemniscate(q(4), 2), Place::finite(2)) == LogValue::at_prime(2, q(1)));
    SUBCASE("a / t^m reproduces the disk formula") {
        for (std::uint64_t p : {2, 3, 5})
            for (unsigned m = 1; m <= 4; ++m)
                for (long a : {1L, 2L, 12L, 45L, 250L}) {
                    Rational ar(a, 7);
                    LogValue got = cap_log_norm_lemniscate(monomial_lemniscate(ar, m), Place::finite(p));
                    // -(1/m) log|a| = v_p(a) / m in valuation units
                    CHECK(got == LogValue::at_prime(p, make_rational(static_cast<long>(*oracle::valuation(ar, p)), static_cast<long>(m))));
                }
    }
    SUBCASE("powers of f leave the norm unchanged") {
        Lemniscate f{poly({q(3), q(1)}), poly({q(0), q(0), q(1)}), q(0), 2}; // (t + 3)/t^2
        Lemniscate f3{poly({q(27), q(27), q(9), q(1)}), Polynomial::monomial(q(1), 6), q(0), 6};
        for (std::uint64_t p : {2, 3, 5})
            CHECK(cap_log_norm_lemniscate(f, Place::finite(p)) == cap_log_norm_lemniscate(f3, Place::finite(p)));
    }
    SUBCASE("pole checks") {
        Lemniscate two_poles{Polynomial::constant(q(1)), poly({q(0), q(-1), q(1)}), q(0), 1}; // 1/(t(t-1))
        CHECK_THROWS_AS(cap_log_norm_lemniscate(two_poles, Place::finite(2)), Error);
        Lemniscate wrong_order = monomial_lemniscate(q(1), 2);
        wrong_order.order = 3;
        CHECK_THROWS_AS(cap_log_norm_lemniscate(wrong_order, Place::finite(2)), Error);
    }
}

TEST_CASE("green functions") {
    DomainSpec lem{Place::finite(3), monomial_lemniscate(q(1), 2)};
    CHECK(green_log_eval(lem, q(5)) == LogValue::at_prime(3, q(0)));
    CHECK(green_log_eval(lem, q(3)) == LogValue::at_prime(3, q(1)));
    CHECK_THROWS_AS(green_log_eval(lem, q(0)), Error);
    DomainSpec disk{Place::finite(2), PadicDisk{q(0), q(1)}};
    // r = 2, |x| = 1/4: log+(r/|x|) = 3 log 2
    CHECK(green_log_eval(disk, q(4)) == LogValue::at_prime(2, q(3)));
    CHECK(green_log_eval(disk, q(1, 4)) == LogValue::at_prime(2, q(0)));
}

TEST_CASE("compact capacities") {
    CHECK(archimedean_capacity(CompactDisk{Complex(0, 0), 1.0}).log_capacity == doctest::Approx(0.0));
    CHECK(archimedean_capacity(CompactInterval{-2.0, 2.0}).log_capacity == doctest::Approx(0.0));
    CHECK(archimedean_capacity(CompactInterval{0.0, 1.0}).log_capacity == doctest::Approx(std::log(0.25)));
    auto seg = archimedean_capacity(CompactCurve{{Complex(-2, 0), Complex(2, 0)}});
    CHECK(std::fabs(seg.log_capacity) < 1e-3);
    // unit square: cap = Gamma(1/4)^2 / (4 pi^{3/2})
    double square = std::pow(std::tgamma(0.25), 2) / (4.0 * std::pow(std::acos(-1.0), 1.5));
    auto sq = archimedean_capacity(CompactCurve{{Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0, 1), Complex(0, 0)}});
    CHECK(std::exp(sq.log_capacity) == doctest::Approx(square).epsilon(2e-3));
}

TEST_CASE("place norms") {
    SUBCASE("complement of [1/4, inf] at 0") {
        auto n = place_log_norm({Place::archimedean(), ArchIntervalComplement{Endpoint::at(q(1, 4)), Endpoint::infinity(1)}}, q(0));
        CHECK(std::fabs(n.log_norm.to_double()) < 1e-3);
        REQUIRE(n.cross_check);
        CHECK(std::fabs(*n.cross_check) < 1e-3);
    }
    SUBCASE("complement of [-1, 1] at infinity-free base 2") {
        // conformal radius of P^1 \ [-1, 1] at x: 4 / |1/(1 - x) - 1/(-1 - x)|
        auto n = place_log_norm({Place::archimedean(), ArchIntervalComplement{Endpoint::at(q(-1)), Endpoint::at(q(1))}}, q(2));
        double expected = -std::log(4.0 / std::fabs(1.0 / (1.0 - 2.0) - 1.0 / (-1.0 - 2.0)));
        CHECK(n.log_norm.to_double() == doctest::Approx(expected).epsilon(1e-12));
        REQUIRE(n.cross_check);
        CHECK(*n.cross_check == doctest::Approx(expected).epsilon(1e-6));
    }
    SUBCASE("archimedean disk off center") {
        auto n = place_log_norm({Place::archimedean(), ArchDisk{q(1), q(3)}}, q(0));
        CHECK(n.log_norm.to_double() == doctest::Approx(-std::log((9.0 - 1.0) / 3.0)));
    }
    SUBCASE("base point outside") {
        CHECK_THROWS_AS(place_log_norm({Place::finite(2), PadicDisk{q(1), q(-1)}}, q(0)), Error);
    }
}

TEST_CASE("arakelov degree") {
    SUBCASE("R_2 = 2") {
        auto r = arakelov_degree(tube_with({{Place::finite(2), PadicDisk{q(0), q(1)}}}));
        CHECK(r.sign == DegreeSign::Positive);
        CHECK(r.decided_exactly);
        CHECK(r.exact_part.at(2) == q(1));
        CHECK(r.total == doctest::Approx(std::log(2.0)));
    }
    SUBCASE("all unit") {
        auto r = arakelov_degree(AdelicTube{});
        CHECK(r.sign == DegreeSign::Boundary);
        CHECK(r.exact_zero);
        CHECK(r.total == 0.0);
    }
    SUBCASE("R_2 = 2, R_inf = 1/4") {
        auto r = arakelov_degree(
            tube_with({{Place::finite(2), PadicDisk{q(0), q(1)}}, {Place::archimedean(), ArchDisk{q(0), q(1, 4)}}}));
        CHECK(r.sign == DegreeSign::Negative);
        CHECK(r.total == doctest::Approx(-std::log(2.0)));
        CHECK(r.width() < 1e-9);
    }
    SUBCASE("exact cancellation across places") {
        // R_2 = 2 and R_inf = 1/2: degree exactly 0
        auto r = arakelov_degree(
            tube_with({{Place::finite(2), PadicDisk{q(0), q(1)}}, {Place::archimedean(), ArchDisk{q(0), q(1, 2)}}}));
        CHECK(r.sign == DegreeSign::Boundary);
        CHECK(r.exact_zero);
    }
    SUBCASE("6 = 2 * 3 against 1/6") {
        auto r = arakelov_degree(tube_with({{Place::finite(2), PadicDisk{q(0), q(1)}},
                                            {Place::finite(3), PadicDisk{q(0), q(1)}},
                                            {Place::archimedean(), ArchDisk{q(0), q(1, 5)}}}));
        CHECK(r.sign == DegreeSign::Positive);
        CHECK(r.decided_exactly);
    }
    SUBCASE("contributions add up") {
        auto r = arakelov_degree(tube_with({{Place::finite(2), PadicDisk{q(0), q(3, 2)}},
                                            {Place::finite(5), monomial_lemniscate(q(25), 1)},
                                            {Place::archimedean(), ArchDisk{q(0), q(3)}}}));
        double sum = 0.0;
        for (const auto &c : r.contributions)
            sum += c.value.to_double();
        CHECK(r.total == doctest::Approx(sum).epsilon(1e-12));
    }
    CHECK(exact_log_sign({{q(2), q(1)}, {q(3), q(-1)}}) == -1);
    CHECK(exact_log_sign({{q(4), q(1)}, {q(2), q(-2)}}) == 0);
}

TEST_CASE("monotonicity") {
    auto small = tube_with({{Place::finite(2), PadicDisk{q(0), q(0)}}});
    auto big = tube_with({{Place::finite(2), PadicDisk{q(0), q(1)}}});
    auto rep = monotonicity_check(small, big);
    CHECK(rep.holds);
    REQUIRE(!rep.entries.empty());
    for (const auto &e : rep.entries)
        if (e.place == Place::finite(2)) {
            REQUIRE(e.exact_drop);
            CHECK(*e.exact_drop == q(1));
        }
    CHECK(monotonicity_check(big, big).holds);
    CHECK_THROWS_AS(monotonicity_check(big, small), Error);

    SUBCASE("lemniscate f against f / p") {
        Lemniscate f{poly({q(1), q(1)}), poly({q(0), q(0), q(1)}), q(0), 2};
        Lemniscate fp{poly({q(1, 3), q(1, 3)}), poly({q(0), q(0), q(1)}), q(0), 2};
        auto r = monotonicity_check(tube_with({{Place::finite(3), f}}), tube_with({{Place::finite(3), fp}}));
        CHECK(r.holds);
        for (const auto &e : r.entries)
            if (e.place == Place::finite(3)) {
                REQUIRE(e.exact_drop);
                CHECK(*e.exact_drop == q(1, 2));
            }
    }
    SUBCASE("archimedean disks") {
        auto r = monotonicity_check(tube_with({{Place::archimedean(), ArchDisk{q(0), q(1)}}}),
                                    tube_with({{Place::archimedean(), ArchDisk{q(0), q(3)}}}));
        CHECK(r.holds);
    }
}

TEST_CASE("tube validation") {
    CHECK_THROWS_AS(validate_tube(tube_with({{Place::finite(2), ArchDisk{q(0), q(1)}}})), Error);
    CHECK_THROWS_AS(validate_tube(tube_with({{Place::archimedean(), PadicDisk{q(0), q(1)}}})), Error);
}
