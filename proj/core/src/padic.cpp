// SPDX-License-Identifier: Apache-2.0
#include "adelic/padic.hpp"

#include <algorithm>
#include <cmath>

#include "adelic/error.hpp"

namespace adelic {

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

// Cap on how far closed-form valuations are scanned when a Gauss norm needs a
// longer horizon than the stored truncation.
constexpr std::size_t kHorizonCap = 1u << 16;

__extension__ using Wide = __int128;

} // namespace

bool tail_above_line(const PowerSeriesTrunc &g, std::uint64_t p, const Rational &slope, const Rational &offset,
                     std::size_t last_known) {
    if (!g.has_rule())
        return false;
    auto bound = g.identity()->tail_bound(p);
    if (!bound)
        return false;
    if (bound->zero_beyond && *bound->zero_beyond <= last_known)
        return true;
    auto line = [&](std::size_t n) -> Rational { return slope * static_cast<long>(n) + offset; };
    std::size_t first = last_known + 1;
    if (static_cast<long>(first) - bound->shift < 1)
        return false;
    // Between consecutive powers of p the bound is affine with slope
    // bound->slope, and it drops by log_coeff at m = p^j.
    int c = cmp(bound->slope, slope);
    if (c < 0)
        return false;
    if (c == 0) {
        if (bound->log_coeff != 0)
            return false;
        return bound->at(first, p) >= line(first);
    }
    if (bound->at(first, p) < line(first))
        return false;
    if (bound->log_coeff == 0)
        return true;
    Rational gap = bound->slope - slope;
    Integer pj = 1;
    for (int j = 0; j < 128; ++j, pj *= static_cast<unsigned long>(p)) {
        Integer n = pj + bound->shift;
        if (n > static_cast<long>(last_known)) {
            std::size_t nn = n.get_ui();
            if (!n.fits_ulong_p())
                return true;
            if (bound->at(nn, p) < line(nn))
                return false;
            if (gap * Rational(pj) * static_cast<long>(p - 1) >= bound->log_coeff)
                return true;
        }
    }
    return true;
}

NewtonPolygon newton_polygon(const PowerSeriesTrunc &g, std::uint64_t p) {
    require_prime(p);
    NewtonPolygon poly;
    poly.prime = p;
    struct Pt {
        long x;
        long y;
    };
    std::vector<Pt> hull;
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        if (g[i] == 0)
            continue;
        Pt q{static_cast<long>(i), static_cast<long>(valuation_nonzero(g[i], p))};
        // pop while the last turn is not strictly convex (counter-clockwise)
        while (hull.size() >= 2) {
            const Pt &a = hull[hull.size() - 2];
            const Pt &b = hull.back();
            Wide cross = static_cast<Wide>(b.x - a.x) * (q.y - a.y) - static_cast<Wide>(b.y - a.y) * (q.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    if (hull.empty())
        throw Error(ErrorCode::ZeroSeries, "Newton polygon of the zero series");
    for (const auto &pt : hull)
        poly.vertices.push_back({static_cast<std::size_t>(pt.x), Rational(pt.y)});
    for (std::size_t k = 1; k < hull.size(); ++k)
        poly.slopes.push_back(make_rational(hull[k].y - hull[k - 1].y, hull[k].x - hull[k - 1].x));

    std::size_t N = g.truncation();
    for (std::size_t k = 0; k < poly.slopes.size(); ++k) {
        const auto &v0 = poly.vertices[k];
        Rational offset = v0.valuation - poly.slopes[k] * static_cast<long>(v0.index);
        if (!tail_above_line(g, p, poly.slopes[k], offset, N))
            break;
        ++poly.certified_segments;
    }
    bool exact;
    if (poly.slopes.empty()) {
        // single point: the tail must vanish for the polygon to be final
        auto b = g.has_rule() ? g.identity()->tail_bound(p) : std::nullopt;
        exact = b && b->zero_beyond && *b->zero_beyond <= N;
    } else {
        exact = poly.certified_segments == poly.slopes.size();
    }
    poly.exactness = exact ? Exactness::Exact : Exactness::TruncationBound;
    return poly;
}

GaussNorm gauss_log_norm(const PowerSeriesTrunc &g, std::uint64_t p, const Rational &log_r) {
    require_prime(p);
    std::size_t N = g.truncation();

    if (g.has_rule()) {
        if (auto rho = g.identity()->log_radius(Place::finite(p)); rho && rho->kind() == LogValue::Kind::PrimeMultiple) {
            int c = cmp(log_r, rho->coeff());
            auto unbounded = g.identity()->unbounded_on_radius(p);
            if (c > 0 || (c == 0 && unbounded && *unbounded))
                return {LogValue::plus_infinity(p), Exactness::Exact, N};
        }
    }

    std::optional<Rational> best;
    auto consider = [&](std::size_t n, const Valuation &v) {
        if (v.is_infinite())
            return;
        Rational term = log_r * static_cast<long>(n) - Rational(v.value());
        if (!best || term > *best)
            best = term;
    };
    for (std::size_t n = 0; n <= N; ++n)
        consider(n, padic_valuation(g[n], p));

    std::size_t horizon = N;
    auto certified = [&](std::size_t last) {
        Rational offset = best ? Rational(-*best) : Rational(0);
        return best ? tail_above_line(g, p, log_r, offset, last) : false;
    };
    bool exact = certified(horizon);
    if (!exact && g.has_rule() && g.identity()->valuation_at(0, p)) {
        // extend through the closed-form valuations until the tail bound closes
        while (!exact && horizon < kHorizonCap) {
            std::size_t next = std::min(kHorizonCap, std::max<std::size_t>(2 * horizon + 1, 16));
            for (std::size_t n = horizon + 1; n <= next; ++n)
                consider(n, *g.identity()->valuation_at(n, p));
            horizon = next;
            exact = certified(horizon);
        }
    }
    if (!best) {
        auto b = g.has_rule() ? g.identity()->tail_bound(p) : std::nullopt;
        bool zero = b && b->zero_beyond && *b->zero_beyond <= N;
        return {LogValue::minus_infinity(p), zero ? Exactness::Exact : Exactness::TruncationBound, horizon};
    }
    return {LogValue::at_prime(p, *best), exact ? Exactness::Exact : Exactness::TruncationBound, horizon};
}

SizeResult size_of_graph(const PowerSeriesTrunc &phi, std::uint64_t p) {
    Place place = Place::finite(p);
    if (phi[0] != 0)
        throw Error(ErrorCode::NotPointed, "phi(0) = " + to_string(phi[0]) + " != 0");
    if (phi.truncation() < 1)
        throw Error(ErrorCode::TruncationTooShort, "need at least the linear coefficient");
    Valuation v1 = padic_valuation(phi[1], p);
    if (v1 != Valuation::of(0))
        throw Error(ErrorCode::DerivativeNotUnit,
                    "phi'(0) = " + to_string(phi[1]) + " is not a unit at p = " + std::to_string(p));
    if (phi.has_rule()) {
        auto rho = phi.identity()->log_radius(place);
        if (rho && rho->is_minus_infinity())
            throw Error(ErrorCode::InvalidArgument, "radius of convergence is zero");
    }

    PowerSeriesTrunc g = phi.divided_by_x();
    NewtonPolygon poly = newton_polygon(g, p);
    std::optional<Rational> lambda = poly.first_slope();
    Rational capped = lambda ? std::min(*lambda, Rational(0)) : Rational(0);
    // g(0) is a unit, so the hull starts at (0, 0): size is exact once every
    // tail point lies above the line of slope min(0, lambda) through the origin
    bool exact = tail_above_line(g, p, capped, Rational(0), g.truncation());
    if (!exact && phi.has_rule()) {
        if (auto closed = phi.identity()->graph_first_slope(p)) {
            lambda = *closed;
            capped = std::min(*closed, Rational(0));
            exact = true;
        }
    }
    return {place, LogValue::at_prime(p, capped), exact ? Exactness::Exact : Exactness::TruncationBound, lambda};
}

RadiusResult log_radius_of_convergence(const PowerSeriesTrunc &g, const Place &place) {
    if (g.has_rule()) {
        if (auto rho = g.identity()->log_radius(place))
            return {place, *rho, rho->kind() == LogValue::Kind::Real ? Exactness::TruncationBound : Exactness::Exact};
    }
    if (g.stored_zero())
        throw Error(ErrorCode::ZeroSeries, "radius of convergence of the zero series");

    std::size_t N = g.truncation();
    std::size_t lo = std::max<std::size_t>(1, (N + 1) / 2);
    if (place.is_finite()) {
        std::uint64_t p = place.prime();
        std::optional<Rational> best;
        for (std::size_t n = lo; n <= N; ++n) {
            if (g[n] == 0)
                continue;
            Rational r = make_rational(static_cast<long>(valuation_nonzero(g[n], p)), static_cast<long>(n));
            if (!best || r < *best)
                best = r;
        }
        if (!best)
            return {place, LogValue::plus_infinity(p), Exactness::TruncationBound};
        return {place, LogValue::at_prime(p, *best), Exactness::TruncationBound};
    }

    // Fit log|c_n| = A n + B log n + C on the upper half of the window; the
    // log n term absorbs polynomial prefactors (e.g. n^{-1/2}).
    std::vector<double> xs, ls, ys;
    for (std::size_t n = lo; n <= N; ++n) {
        if (g[n] == 0)
            continue;
        xs.push_back(static_cast<double>(n));
        ls.push_back(std::log(static_cast<double>(n)));
        ys.push_back(log_abs(g[n]));
    }
    if (xs.empty())
        return {place, LogValue::plus_infinity(), Exactness::TruncationBound};
    double slope;
    if (xs.size() >= 4) {
        // normal equations for the 3-parameter fit
        double S[3][3] = {}, b[3] = {};
        for (std::size_t k = 0; k < xs.size(); ++k) {
            double row[3] = {xs[k], ls[k], 1.0};
            for (int i = 0; i < 3; ++i) {
                b[i] += row[i] * ys[k];
                for (int j = 0; j < 3; ++j)
                    S[i][j] += row[i] * row[j];
            }
        }
        for (int c = 0; c < 3; ++c) {
            int piv = c;
            for (int r = c + 1; r < 3; ++r)
                if (std::fabs(S[r][c]) > std::fabs(S[piv][c]))
                    piv = r;
            std::swap(S[c], S[piv]);
            std::swap(b[c], b[piv]);
            for (int r = 0; r < 3; ++r) {
                if (r == c)
                    continue;
                double f = S[r][c] / S[c][c];
                for (int j = 0; j < 3; ++j)
                    S[r][j] -= f * S[c][j];
                b[r] -= f * b[c];
            }
        }
        slope = b[0] / S[0][0];
    } else {
        slope = -INFINITY;
        for (std::size_t k = 0; k < xs.size(); ++k)
            slope = std::max(slope, ys[k] / xs[k]);
    }
    return {place, LogValue::real(-slope), Exactness::TruncationBound};
}

SizeRadiusReport check_size_radius_inequality(const PowerSeriesTrunc &phi, std::uint64_t p) {
    SizeResult size = size_of_graph(phi, p);
    RadiusResult radius = log_radius_of_convergence(phi, Place::finite(p));
    auto ord = radius.log_radius <=> size.log_size;
    bool holds = ord == std::partial_ordering::greater || ord == std::partial_ordering::equivalent;
    bool equality = ord == std::partial_ordering::equivalent;
    bool exact = size.exactness == Exactness::Exact && radius.exactness == Exactness::Exact;
    return {radius, size, holds, equality, exact};
}

} // namespace adelic
