// SPDX-License-Identifier: Apache-2.0
#include "adelic/fekete.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "adelic/error.hpp"

namespace adelic {

namespace {

double closed_wrap(double s, double L, bool closed) {
    if (!closed)
        return s;
    s = std::fmod(s, L);
    return s < 0 ? s + L : s;
}

double pair_energy(const std::vector<Complex> &z) {
    double e = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            e += std::log(std::abs(z[i] - z[j]));
    return e;
}

// Solves the 4x4 system with partial pivoting.
std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> A, std::array<double, 4> b) {
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::fabs(A[r][c]) > std::fabs(A[piv][c]))
                piv = r;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (int r = c + 1; r < 4; ++r) {
            double f = A[r][c] / A[c][c];
            for (int j = c; j < 4; ++j)
                A[r][j] -= f * A[c][j];
            b[r] -= f * b[c];
        }
    }
    std::array<double, 4> x{};
    for (int r = 3; r >= 0; --r) {
        double s = b[r];
        for (int j = r + 1; j < 4; ++j)
            s -= A[r][j] * x[j];
        x[r] = s / A[r][r];
    }
    return x;
}

double extrapolate(const std::array<std::pair<std::size_t, double>, 4> &rows) {
    std::array<std::array<double, 4>, 4> A{};
    std::array<double, 4> b{};
    for (int k = 0; k < 4; ++k) {
        double n = static_cast<double>(rows[k].first);
        A[k] = {1.0, std::log(n) / (n - 1.0), 1.0 / n, 1.0 / (n * n)};
        b[k] = rows[k].second;
    }
    return solve4(A, b)[0];
}

} // namespace

ParametrizedCurve polyline_curve(const std::vector<Complex> &vertices) {
    if (vertices.size() < 2)
        throw Error(ErrorCode::UnsupportedShape, "a polyline needs at least two vertices");
    std::vector<double> cum{0.0};
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        double len = std::abs(vertices[i] - vertices[i - 1]);
        if (len == 0.0)
            throw Error(ErrorCode::UnsupportedShape, "repeated consecutive polyline vertex");
        cum.push_back(cum.back() + len);
    }
    ParametrizedCurve c;
    c.length = cum.back();
    c.closed = vertices.size() > 2 && vertices.front() == vertices.back();
    c.at = [vertices, cum](double s) {
        if (s <= 0)
            return vertices.front();
        if (s >= cum.back())
            return vertices.back();
        std::size_t k = std::upper_bound(cum.begin(), cum.end(), s) - cum.begin();
        double t = (s - cum[k - 1]) / (cum[k] - cum[k - 1]);
        return vertices[k - 1] + t * (vertices[k] - vertices[k - 1]);
    };
    return c;
}

ParametrizedCurve inverted_curve(const ParametrizedCurve &curve, Complex base) {
    ParametrizedCurve c = curve;
    auto f = curve.at;
    c.at = [f, base](double s) { return 1.0 / (f(s) - base); };
    return c;
}

FeketeConfiguration fekete_points(const ParametrizedCurve &curve, std::size_t n, std::size_t max_sweeps,
                                  double tolerance) {
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "need at least two Fekete points");
    const double L = curve.length;
    FeketeConfiguration cfg;
    cfg.params.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (curve.closed)
            cfg.params[i] = L * static_cast<double>(i) / static_cast<double>(n);
        else
            cfg.params[i] = 0.5 * L * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1)));
    }
    cfg.points.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        cfg.points[i] = curve.at(cfg.params[i]);

    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    auto local = [&](std::size_t i, double s) {
        Complex z = curve.at(closed_wrap(s, L, curve.closed));
        double e = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                e += std::log(std::abs(z - cfg.points[j]));
        return e;
    };

    double energy = pair_energy(cfg.points);
    cfg.sweeps = 0;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        ++cfg.sweeps;
        for (std::size_t i = 0; i < n; ++i) {
            double lo, hi;
            if (curve.closed) {
                lo = i == 0 ? cfg.params[n - 1] - L : cfg.params[i - 1];
                hi = i + 1 == n ? cfg.params[0] + L : cfg.params[i + 1];
            } else {
                lo = i == 0 ? 0.0 : cfg.params[i - 1];
                hi = i + 1 == n ? L : cfg.params[i + 1];
            }
            double a = lo, b = hi;
            double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
            double f1 = local(i, x1), f2 = local(i, x2);
            while (b - a > 1e-9 * (hi - lo)) {
                if (f1 < f2) {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + golden * (b - a);
                    f2 = local(i, x2);
                } else {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - golden * (b - a);
                    f1 = local(i, x1);
                }
            }
            double best = 0.5 * (a + b);
            // the ends of an open curve are attained exactly
            if (!curve.closed && i == 0 && local(i, 0.0) >= local(i, best))
                best = 0.0;
            if (!curve.closed && i + 1 == n && local(i, L) >= local(i, best))
                best = L;
            if (local(i, best) >= local(i, cfg.params[i])) {
                cfg.params[i] = best;
                cfg.points[i] = curve.at(closed_wrap(best, L, curve.closed));
            }
        }
        if (curve.closed) {
            for (auto &s : cfg.params)
                s = closed_wrap(s, L, true);
            // keep the parameters increasing after wrapping
            std::vector<std::size_t> order(n);
            for (std::size_t k = 0; k < n; ++k)
                order[k] = k;
            std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cfg.params[x] < cfg.params[y]; });
            std::vector<double> ps(n);
            std::vector<Complex> zs(n);
            for (std::size_t k = 0; k < n; ++k) {
                ps[k] = cfg.params[order[k]];
                zs[k] = cfg.points[order[k]];
            }
            cfg.params = std::move(ps);
            cfg.points = std::move(zs);
        }
        double next = pair_energy(cfg.points);
        bool done = std::fabs(next - energy) <= tolerance * std::max(1.0, std::fabs(next));
        energy = next;
        if (done)
            break;
    }
    double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    cfg.log_delta = energy / pairs;
    return cfg;
}

TransfiniteEstimate transfinite_diameter(const ParametrizedCurve &curve, std::size_t n_max) {
    if (n_max < 16 || n_max > 64 || n_max % 8 != 0 || ((n_max / 8) & (n_max / 8 - 1)) != 0)
        throw Error(ErrorCode::InvalidArgument, "n_max must be 16, 32 or 64");
    TransfiniteEstimate est;
    for (std::size_t n = n_max / 16; n <= n_max; n *= 2) {
        if (n < 2)
            continue;
        est.ladder.push_back({n, fekete_points(curve, n).log_delta});
    }
    auto top = [&](std::size_t offset) {
        std::array<std::pair<std::size_t, double>, 4> rows;
        for (int k = 0; k < 4; ++k)
            rows[k] = est.ladder[est.ladder.size() - 4 - offset + k];
        return extrapolate(rows);
    };
    est.log_capacity = top(0);
    est.error_estimate = est.ladder.size() >= 5 ? std::fabs(est.log_capacity - top(1)) : NAN;
    return est;
}

} // namespace adelic
