// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <random>

#include "adelic/error.hpp"
#include "adelic/filtration.hpp"
#include "adelic/padic.hpp"
#include "oracles.hpp"

using namespace adelic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PowerSeriesTrunc identity_t(std::size_t N) {
    std::vector<Rational> c(N + 1, Rational(0));
    c[1] = 1;
    return PowerSeriesTrunc(c);
}

// t itself, tagged as a polynomial so the archimedean estimates apply
PowerSeriesTrunc tagged_t(std::size_t N) {
    return PowerSeriesTrunc::from_identity(
        SeriesIdentity::rational(Polynomial::monomial(Rational(1), 1), Polynomial::constant(Rational(1))), N);
}

PowerSeriesTrunc x_over_1mx(std::size_t N) {
    return PowerSeriesTrunc::from_identity(SeriesIdentity::geometric(q(1), 1), N);
}

// Rank of a dense rational matrix by naive elimination (oracle).
std::size_t rank_of(std::vector<std::vector<Rational>> A) {
    std::size_t r = 0, rows = A.size(), cols = rows ? A[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(A[piv], A[r]);
        for (std::size_t k = r + 1; k < rows; ++k) {
            Rational f = A[k][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j)
                A[k][j] -= f * A[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("jet matrix") {
    auto J = jet_matrix(identity_t(6), 1, 4);
    REQUIRE(J.size() == 4);
    // monomial (a, b) = (1, 1) restricted to y = t is t^2
    CHECK(J[1 * 2 + 1][2] == 1);
    CHECK_THROWS_AS(jet_matrix(PowerSeriesTrunc({q(1), q(1)}), 1, 0), Error);
    CHECK_THROWS_AS(jet_matrix(identity_t(3), 1, 3), Error);
}

TEST_CASE("vanishing filtration") {
    SUBCASE("diagonal, D = 2") {
        auto t = vanishing_filtration(identity_t(12), 2, 8);
        for (std::size_t i = 0; i <= 4; ++i)
            CHECK(t.ranks[i] == 1);
        for (std::size_t i = 5; i <= 8; ++i)
            CHECK(t.ranks[i] == 0);
        CHECK(t.limit_dimension == 4);
        REQUIRE(t.stationary_index);
        CHECK(*t.stationary_index == 5);
    }
    SUBCASE("phi = 0: the x-axis") {
        PowerSeriesTrunc zero(std::vector<Rational>(10, Rational(0)));
        auto t = vanishing_filtration(zero, 3, 6);
        for (std::size_t i = 0; i <= 3; ++i)
            CHECK(t.ranks[i] == 1);
        REQUIRE(t.stationary_index);
        CHECK(*t.stationary_index == 4);
    }
    SUBCASE("expm1, D = 2") {
        auto t = vanishing_filtration(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 14), 2, 12);
        for (std::size_t i = 0; i <= 8; ++i)
            CHECK(t.ranks[i] == 1);
        CHECK(t.limit_dimension == 0);
        CHECK(!t.stationary_index);
    }
    SUBCASE("x/(1-x), D = 3") {
        auto t = vanishing_filtration(x_over_1mx(14), 3, 12);
        REQUIRE(t.stationary_index);
        CHECK(*t.stationary_index == 7);
        CHECK(algebraicity_ratio(t) == 1);
    }
    SUBCASE("rank identity and the row-reduction oracle") {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<long> d(-4, 4);
        for (int k = 0; k < 10; ++k) {
            std::vector<Rational> c(12, Rational(0));
            for (std::size_t i = 1; i < 12; ++i)
                c[i] = make_rational(d(rng), 1 + std::abs(d(rng)));
            PowerSeriesTrunc phi(c);
            for (std::size_t D : {1, 2}) {
                std::size_t imax = 9;
                auto t = vanishing_filtration(phi, D, imax);
                std::size_t total = t.limit_dimension;
                for (unsigned r : t.ranks)
                    total += r;
                CHECK(total == (D + 1) * (D + 1));
                // dim E^i = n - rank of the first i jet columns
                auto J = jet_matrix(phi, D, imax);
                for (std::size_t i = 0; i <= imax + 1; ++i) {
                    std::vector<std::vector<Rational>> A(J.size(), std::vector<Rational>(i));
                    for (std::size_t s = 0; s < J.size(); ++s)
                        for (std::size_t j = 0; j < i; ++j)
                            A[s][j] = J[s][j];
                    std::size_t dim = J.size() - (i ? rank_of(A) : 0);
                    std::size_t from_table = t.limit_dimension;
                    for (std::size_t j = i; j <= imax; ++j)
                        from_table += t.ranks[j];
                    CHECK(dim == from_table);
                }
            }
        }
    }
}

TEST_CASE("algebraicity ratio") {
    auto tables = vanishing_filtrations(identity_t(16), {1, 2, 3, 4, 5}, 14);
    for (const auto &t : tables)
        CHECK(algebraicity_ratio(t) == 1);
    auto e = PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 26);
    for (std::size_t D = 1; D <= 4; ++D) {
        auto t = vanishing_filtration(e, D, 25);
        CHECK(algebraicity_ratio(t) >= make_rational(static_cast<long>((D + 1) * (D + 1)), static_cast<long>(4 * D)));
    }
    FiltrationTable empty;
    empty.ranks = {0, 0};
    CHECK_THROWS_AS(algebraicity_ratio(empty), Error);
}

TEST_CASE("p-adic jet norms") {
    SUBCASE("phi = t") {
        auto entries = jet_norms_padic(identity_t(12), 3, 10, 5);
        for (const auto &e : entries) {
            if (e.i <= 6)
                CHECK(e.log_norm == LogValue::at_prime(5, q(0)));
            else
                CHECK(e.log_norm.is_minus_infinity());
        }
        auto zero = jet_operator_norm_padic(identity_t(12), 3, 0, 5);
        CHECK(zero.log_norm == LogValue::at_prime(5, q(0)));
        REQUIRE(zero.witness.size() == 16);
        CHECK(zero.witness[0] == 1);
    }
    SUBCASE("log(1+t) obeys the size bound") {
        auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 30);
        for (std::uint64_t p : {2, 3}) {
            auto table = jet_norm_table_padic(phi, {1, 2, 3}, 28, p);
            for (const auto &e : table.entries) {
                if (e.i == 0 || !e.log_norm.is_finite())
                    continue;
                CHECK(e.log_norm.coeff() / Rational(static_cast<long>(e.i)) <= Rational(1, static_cast<long>(p - 1)));
            }
            auto rho = rho_and_canonical({table}, Place::finite(p), q(0));
            auto size = size_of_graph(phi, p);
            CHECK(schwarz_comparison(rho.rho_window, size.log_size));
        }
    }
    SUBCASE("algebraic graphs have rho = -inf") {
        for (const auto &phi : {identity_t(20), x_over_1mx(20)}) {
            auto table = jet_norm_table_padic(phi, {1, 2, 3}, 18, 3);
            auto rho = rho_and_canonical({table}, Place::finite(3), q(5, 2));
            CHECK(rho.rho_window.is_minus_infinity());
            CHECK(rho.canonical_log_norm.is_minus_infinity());
        }
    }
    CHECK_THROWS_AS(rho_and_canonical({}, Place::finite(2), q(0)), Error);
}

TEST_CASE("archimedean jet estimates") {
    SUBCASE("phi = t") {
        for (std::size_t i = 0; i <= 4; ++i) {
            auto a = jet_norm_arch_estimate(tagged_t(10), 2, i, 64);
            CHECK(a.lo <= a.hi + 1e-12);
            CHECK(a.lo <= 1e-12);
            CHECK(a.lo >= -std::log(2.0));
        }
    }
    SUBCASE("enclosures are ordered for log(1+t)") {
        auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 30);
        for (std::size_t i = 0; i <= 8; ++i) {
            auto a = jet_norm_arch_estimate(phi, 2, i, 0);
            CHECK(a.lo <= a.hi);
            CHECK(a.radius <= 0.5);
        }
    }
    SUBCASE("beyond the section count the map is zero") {
        auto a = jet_norm_arch_estimate(PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), 12), 1, 4, 0);
        CHECK(std::isinf(a.lo));
        CHECK(a.lo < 0);
        CHECK(std::isinf(a.hi));
        CHECK(a.hi < 0);
    }
    CHECK_THROWS_AS(jet_norm_arch_estimate(PowerSeriesTrunc({q(0), q(1), q(1, 2), q(1, 3)}), 1, 1, 0), Error);
}
