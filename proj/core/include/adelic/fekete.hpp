// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace adelic {

using Complex = std::complex<double>;

/// A compact curve given by a parametrization on [0, length]; `closed`
/// identifies the two ends.
struct ParametrizedCurve {
    std::function<Complex(double)> at;
    double length = 1.0;
    bool closed = false;
};

/// The polyline through `vertices`, parametrized by arclength. A polyline whose
/// last vertex equals the first is closed.
ParametrizedCurve polyline_curve(const std::vector<Complex> &vertices);

/// Image of a curve under z -> 1 / (z - base).
ParametrizedCurve inverted_curve(const ParametrizedCurve &curve, Complex base);

struct FeketeConfiguration {
    std::vector<double> params; // increasing curve parameters
    std::vector<Complex> points;
    double log_delta;           // (2 / (n (n - 1))) * sum_{i<j} log|z_i - z_j|
    std::size_t sweeps;
};

/// Maximizes the discrete logarithmic energy of n points on the curve by
/// cyclic coordinate ascent (golden-section line search in each point's
/// bracket between its neighbours). Deterministic.
FeketeConfiguration fekete_points(const ParametrizedCurve &curve, std::size_t n, std::size_t max_sweeps = 400,
                                  double tolerance = 1e-13);

struct TransfiniteEstimate {
    double log_capacity;
    /// |difference| between the extrapolations over the top ladder and the
    /// ladder one doubling lower.
    double error_estimate;
    std::vector<std::pair<std::size_t, double>> ladder; // (n, log delta_n)
};

/// log delta_n for n = n_max/8, n_max/4, n_max/2, n_max, extrapolated with
/// log delta_n = L + a log(n)/(n-1) + b/n + c/n^2. Requires n_max >= 16, a
/// power-of-two multiple of 8, and n_max <= 64.
TransfiniteEstimate transfinite_diameter(const ParametrizedCurve &curve, std::size_t n_max = 64);

} // namespace adelic
