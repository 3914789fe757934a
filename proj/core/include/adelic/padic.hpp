// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "adelic/log_value.hpp"
#include "adelic/power_series.hpp"

namespace adelic {

struct NewtonVertex {
    std::size_t index;
    Rational valuation;
    friend bool operator==(const NewtonVertex &, const NewtonVertex &) = default;
};

/// Lower convex hull of the points (i, v_p(c_i)), c_i != 0, i <= N.
///
/// `certified_segments` counts the leading segments whose supporting line is
/// proven to lie below every coefficient beyond the truncation (through the
/// identity's tail bound). Those segments are segments of the Newton polygon
/// of the full series. `exactness` is Exact when every segment is certified.
struct NewtonPolygon {
    std::uint64_t prime = 0;
    std::vector<NewtonVertex> vertices;
    std::vector<Rational> slopes;
    std::size_t certified_segments = 0;
    Exactness exactness = Exactness::TruncationBound;

    /// nullopt encodes +inf (a single vertex: no segment).
    std::optional<Rational> first_slope() const {
        if (slopes.empty())
            return std::nullopt;
        return slopes.front();
    }
    bool first_slope_certified() const { return slopes.empty() ? exactness == Exactness::Exact : certified_segments > 0; }
};

NewtonPolygon newton_polygon(const PowerSeriesTrunc &g, std::uint64_t p);

/// True when v_p(c_n) >= slope * n + offset holds for every n > last_known,
/// as certified by the identity's tail bound. False means "not certified".
bool tail_above_line(const PowerSeriesTrunc &g, std::uint64_t p, const Rational &slope, const Rational &offset,
                     std::size_t last_known);

struct GaussNorm {
    LogValue log_norm; // valuation units at p, or +inf / -inf
    Exactness exactness;
    std::size_t horizon; // last coefficient index inspected
};

/// sup_i (i * log r - v_p(a_i) log p) with log r = log_r * log p.
GaussNorm gauss_log_norm(const PowerSeriesTrunc &g, std::uint64_t p, const Rational &log_r);

struct SizeResult {
    Place place;
    LogValue log_size; // <= 0
    Exactness exactness;
    std::optional<Rational> first_slope; // of phi/X in valuation units; nullopt = +inf
};

/// Size of the graph of phi at p via min(1, exp lambda_1). Throws NotPointed,
/// DerivativeNotUnit.
SizeResult size_of_graph(const PowerSeriesTrunc &phi, std::uint64_t p);

struct RadiusResult {
    Place place;
    LogValue log_radius;
    Exactness exactness;
};

/// Throws ZeroSeries for a series known to vanish.
RadiusResult log_radius_of_convergence(const PowerSeriesTrunc &g, const Place &place);

struct SizeRadiusReport {
    RadiusResult radius;
    SizeResult size;
    bool holds;
    bool equality;
    bool exact; // both sides exact, comparison decided in valuation units
};

SizeRadiusReport check_size_radius_inequality(const PowerSeriesTrunc &phi, std::uint64_t p);

} // namespace adelic
