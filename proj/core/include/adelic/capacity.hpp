// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adelic/fekete.hpp"
#include "adelic/log_value.hpp"
#include "adelic/polynomial.hpp"

namespace adelic {

/// A point of the real projective line: a rational or +-infinity.
struct Endpoint {
    std::optional<Rational> value; // nullopt = infinity with `sign`
    int sign = 1;

    static Endpoint at(Rational v) { return {std::move(v), 1}; }
    static Endpoint infinity(int sign) { return {std::nullopt, sign < 0 ? -1 : 1}; }
    bool is_infinite() const noexcept { return !value.has_value(); }
    double to_double() const;
    std::string to_string() const;
    friend bool operator<(const Endpoint &a, const Endpoint &b);
    friend bool operator==(const Endpoint &, const Endpoint &) = default;
};

/// Finite place: the open disk {|t - center|_p < p^log_radius}.
struct PadicDisk {
    Rational center;
    Rational log_radius; // valuation units
};

/// Omega = {|f| > 1} for f = num/den with a single pole at `pole` of order
/// `order` (level 1). Valid at any place.
struct Lemniscate {
    Polynomial num;
    Polynomial den;
    Rational pole;
    unsigned order = 1;
};

/// Archimedean: the open disk D(center, radius), center on the real line.
struct ArchDisk {
    Rational center;
    Rational radius;
};

/// Archimedean: Omega = P^1(C) minus the real interval [a, b], a < b.
struct ArchIntervalComplement {
    Endpoint a;
    Endpoint b;
};

/// Archimedean: Omega = P^1(C) minus the polyline through the vertices.
struct ArchCurveComplement {
    std::vector<Complex> vertices;
};

using DomainShape = std::variant<PadicDisk, Lemniscate, ArchDisk, ArchIntervalComplement, ArchCurveComplement>;

std::string shape_name(const DomainShape &shape);

struct DomainSpec {
    Place place;
    DomainShape shape;
};

/// log ||d/dt|| for a disk centered at the base point: -log r.
LogValue cap_log_norm_disk(const LogValue &log_r);

/// -(1/m) log|c_P|_v with f = c_P (t - P)^{-m} + ...  Throws PoleMismatch,
/// MultiplePoles.
LogValue cap_log_norm_lemniscate(const Lemniscate &f, const Place &place);

/// Leading coefficient c_P of the lemniscate at its pole (validated).
Rational lemniscate_leading_coefficient(const Lemniscate &f);

/// Green function of the domain with pole at its distinguished point, at x:
/// (1/m) log+|f(x)|_v for lemniscates, log+(r / |x - center|_v) for disks.
/// Throws EvaluationAtPole.
LogValue green_log_eval(const DomainSpec &domain, const Rational &x);

/// Compact archimedean sets for archimedean_capacity.
struct CompactDisk {
    Complex center;
    double radius;
};
struct CompactInterval {
    double a;
    double b;
};
struct CompactCurve {
    std::vector<Complex> vertices;
};
using CompactShape = std::variant<CompactDisk, CompactInterval, CompactCurve>;

struct CapacityResult {
    double log_capacity;
    double error_estimate; // 0 for closed forms
    std::string method;
    std::vector<std::pair<std::size_t, double>> ladder; // Fekete only
};

/// Logarithmic capacity (transfinite diameter) of a compact set: closed forms
/// for disks and intervals, extrapolated Fekete points for polylines.
CapacityResult archimedean_capacity(const CompactShape &shape, std::size_t fekete_points = 64);

/// Capacitary log-norm of d/dt at the base point for one place.
struct PlaceNorm {
    Place place;
    LogValue log_norm;
    bool exact = true;        // exact rational / exactly zero archimedean value
    double lo = 0.0, hi = 0.0; // enclosure of log_norm
    std::string method;
    std::optional<double> cross_check; // archimedean second route
    /// Archimedean values known in closed form: log_norm = -(1/m) log q.
    std::optional<std::pair<Rational, unsigned>> closed_form;
};

/// Throws BasePointOutsideDomain, PoleMismatch, MultiplePoles, UnsupportedShape.
PlaceNorm place_log_norm(const DomainSpec &domain, const Rational &base);

/// Per-place domains with the unit disk at the base point as cofinite default.
struct AdelicTube {
    Rational base = 0;
    std::map<Place, DomainShape> places;

    /// The domain at a place (the default when not listed).
    DomainSpec domain_at(const Place &place) const;
};

/// Throws UnsupportedShape when a shape does not fit its place.
void validate_tube(const AdelicTube &tube);

enum class DegreeSign { Positive, Negative, Boundary };

const char *to_string(DegreeSign s);

struct Contribution {
    Place place;
    LogValue value; // -log ||d/dt||_v = log R_v
    bool exact;
    double lo, hi;
    std::string method;
    std::optional<double> cross_check;
};

struct ArakelovDegreeReport {
    std::vector<Contribution> contributions;
    std::map<std::uint64_t, Rational> exact_part; // coefficient of log p
    double exact_value = 0.0;
    double arch_lo = 0.0, arch_hi = 0.0;
    double total = 0.0;
    double total_lo = 0.0, total_hi = 0.0;
    DegreeSign sign = DegreeSign::Boundary;
    bool decided_exactly = true; // sign from exact integer comparison
    bool exact_zero = false;
    double width() const { return total_hi - total_lo; }
};

/// Sign of sum_i e_i log b_i (b_i > 0 rational, e_i rational), decided by
/// comparing integers; nullopt when the integers would be too large.
std::optional<int> exact_log_sign(const std::vector<std::pair<Rational, Rational>> &terms);

ArakelovDegreeReport arakelov_degree(const AdelicTube &tube);

struct MonotonicityEntry {
    Place place;
    PlaceNorm before;
    PlaceNorm after;
    double drop; // before - after (>= 0 when monotone)
    std::optional<Rational> exact_drop;
    bool holds;
};

struct MonotonicityReport {
    std::vector<MonotonicityEntry> entries;
    bool holds;
};

/// Requires each domain of `enlarged` to contain the corresponding domain of
/// `tube` (ContainmentViolation otherwise, or when containment cannot be
/// certified) and the same base point.
MonotonicityReport monotonicity_check(const AdelicTube &tube, const AdelicTube &enlarged);

} // namespace adelic
