// SPDX-License-Identifier: Apache-2.0
#include "adelic/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "adelic/error.hpp"

namespace adelic {

namespace {

constexpr double kUlpPad = 8 * std::numeric_limits<double>::epsilon();

std::pair<double, double> widen(double v) {
    double pad = kUlpPad * (1.0 + std::fabs(v));
    return {v - pad, v + pad};
}

Polynomial power(const Polynomial &p, unsigned k) {
    Polynomial out = Polynomial::constant(1);
    for (unsigned i = 0; i < k; ++i)
        out = out * p;
    return out;
}

Polynomial linear_factor(const Rational &root) { return Polynomial({-root, Rational(1)}); }

Rational rabs(const Rational &q) { return q < 0 ? Rational(-q) : q; }

// log|q|_v at a place, as a LogValue (q != 0).
LogValue log_abs_at(const Rational &q, const Place &place) {
    if (place.is_finite())
        return LogValue::at_prime(place.prime(), Rational(-valuation_nonzero(q, place.prime())));
    return LogValue::real(log_abs(q));
}

// Reduces f and checks the single-pole hypothesis; returns c_P.
struct ReducedLemniscate {
    Polynomial num;
    Polynomial den;
    Rational lead;
};

ReducedLemniscate reduce(const Lemniscate &f) {
    if (f.den.is_zero())
        throw Error(ErrorCode::InvalidArgument, "lemniscate denominator is zero");
    if (f.num.is_zero())
        throw Error(ErrorCode::PoleMismatch, "lemniscate function is zero");
    if (f.order == 0)
        throw Error(ErrorCode::PoleMismatch, "pole order must be positive");
    Polynomial g = Polynomial::gcd(f.num, f.den);
    Polynomial num, den, rem;
    Polynomial::divmod(f.num, g, num, rem);
    Polynomial::divmod(f.den, g, den, rem);
    if (num.degree() > den.degree())
        throw Error(ErrorCode::MultiplePoles, "f has a pole at infinity besides " + to_string(f.pole));
    Polynomial rest = den;
    unsigned k = 0;
    Polynomial lin = linear_factor(f.pole);
    for (;;) {
        Polynomial q, r;
        Polynomial::divmod(rest, lin, q, r);
        if (!r.is_zero())
            break;
        rest = q;
        ++k;
    }
    if (k == 0)
        throw Error(ErrorCode::PoleMismatch, "f has no pole at " + to_string(f.pole));
    if (rest.degree() > 0)
        throw Error(ErrorCode::MultiplePoles, "denominator has roots other than " + to_string(f.pole));
    if (k != f.order)
        throw Error(ErrorCode::PoleMismatch, "pole at " + to_string(f.pole) + " has order " + std::to_string(k) +
                                                 ", declared " + std::to_string(f.order));
    return {num, den, num.evaluate(f.pole) / rest[0]};
}

Rational evaluate_ratio(const Polynomial &num, const Polynomial &den, const Rational &x) {
    Rational d = den.evaluate(x);
    if (d == 0)
        throw Error(ErrorCode::EvaluationAtPole, "evaluation at the pole " + to_string(x));
    return num.evaluate(x) / d;
}

bool is_finite_shape(const DomainShape &s) { return std::holds_alternative<PadicDisk>(s); }
bool is_arch_shape(const DomainShape &s) {
    return std::holds_alternative<ArchDisk>(s) || std::holds_alternative<ArchIntervalComplement>(s) ||
           std::holds_alternative<ArchCurveComplement>(s);
}

// |x - c|_p < p^ell
bool in_padic_disk(const Rational &x, const PadicDisk &d, std::uint64_t p) {
    if (x == d.center)
        return true;
    return Rational(-valuation_nonzero(Rational(x - d.center), p)) < d.log_radius;
}

bool in_interval(const Rational &x, const ArchIntervalComplement &iv) {
    Endpoint e = Endpoint::at(x);
    return !(e < iv.a) && !(iv.b < e);
}

double point_segment_distance(Complex z, Complex a, Complex b) {
    Complex d = b - a;
    double t = std::clamp(std::real((z - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

PlaceNorm finite_value(const Place &place, const LogValue &v, std::string method) {
    PlaceNorm n{place, v, true, v.to_double(), v.to_double(), std::move(method), std::nullopt, std::nullopt};
    return n;
}

PlaceNorm arch_closed_form(const Place &place, const Rational &q, unsigned m, std::string method) {
    // log_norm = -(1/m) log q
    double v = -log_abs(q) / m;
    PlaceNorm n{place, LogValue::real(v), q == 1, 0, 0, std::move(method), std::nullopt, std::make_pair(q, m)};
    if (q == 1) {
        n.log_norm = LogValue::real(0.0);
    } else {
        auto [lo, hi] = widen(v);
        n.lo = lo;
        n.hi = hi;
    }
    return n;
}

// Lemniscate canonical form of a finite-place disk: p^{-n} / (t - c)^d for
// log_radius = n/d.
Lemniscate disk_as_lemniscate(const PadicDisk &d, std::uint64_t p) {
    long n = d.log_radius.get_num().get_si();
    unsigned long den = d.log_radius.get_den().get_ui();
    Integer pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, static_cast<unsigned long>(std::labs(n)));
    Rational a = n >= 0 ? Rational(1) / Rational(pn) : Rational(pn);
    return {Polynomial::constant(a), power(linear_factor(d.center), static_cast<unsigned>(den)), d.center,
            static_cast<unsigned>(den)};
}

// Omega(f) subset Omega(g) for lemniscates with the same pole when
// g^{m_f} = lambda f^{m_g} and |lambda|_v >= 1. nullopt when not comparable.
std::optional<bool> lemniscate_contained(const Lemniscate &f, const Lemniscate &g, const Place &place) {
    if (f.pole != g.pole)
        return std::nullopt;
    ReducedLemniscate rf = reduce(f), rg = reduce(g);
    Polynomial A = power(rg.num, f.order) * power(rf.den, g.order);
    Polynomial B = power(rf.num, g.order) * power(rg.den, f.order);
    Rational lambda = A.leading() / B.leading();
    if (!(A == B.scaled(lambda)))
        return std::nullopt;
    LogValue l = log_abs_at(lambda, place);
    return l.to_double() >= 0 || (l.kind() == LogValue::Kind::PrimeMultiple && l.coeff() >= 0);
}

bool polyline_contains(const std::vector<Complex> &outer, const std::vector<Complex> &inner) {
    // every sample of every inner segment lies on the outer polyline
    for (std::size_t i = 0; i + 1 < inner.size(); ++i)
        for (int k = 0; k <= 16; ++k) {
            Complex z = inner[i] + (inner[i + 1] - inner[i]) * (k / 16.0);
            double best = INFINITY;
            for (std::size_t j = 0; j + 1 < outer.size(); ++j)
                best = std::min(best, point_segment_distance(z, outer[j], outer[j + 1]));
            if (best > 1e-12 * (1.0 + std::abs(z)))
                return false;
        }
    return true;
}

// Decides Omega_1 subset Omega_2 at a place. nullopt = cannot certify.
std::optional<bool> contained(const DomainShape &s1, const DomainShape &s2, const Place &place) {
    auto as_lemniscate = [&](const DomainShape &s) -> std::optional<Lemniscate> {
        if (auto *l = std::get_if<Lemniscate>(&s))
            return *l;
        if (auto *d = std::get_if<PadicDisk>(&s))
            return disk_as_lemniscate(*d, place.prime());
        return std::nullopt;
    };
    if (place.is_finite()) {
        auto *d1 = std::get_if<PadicDisk>(&s1);
        auto *d2 = std::get_if<PadicDisk>(&s2);
        if (d1 && d2)
            return d1->log_radius <= d2->log_radius && in_padic_disk(d1->center, *d2, place.prime());
        auto l1 = as_lemniscate(s1), l2 = as_lemniscate(s2);
        if (l1 && l2)
            return lemniscate_contained(*l1, *l2, place);
        return std::nullopt;
    }
    if (auto *d1 = std::get_if<ArchDisk>(&s1)) {
        if (auto *d2 = std::get_if<ArchDisk>(&s2))
            return rabs(d1->center - d2->center) + d1->radius <= d2->radius;
        if (auto *iv = std::get_if<ArchIntervalComplement>(&s2)) {
            Endpoint lo = Endpoint::at(d1->center - d1->radius), hi = Endpoint::at(d1->center + d1->radius);
            return !(lo < iv->b) || !(iv->a < hi);
        }
        return std::nullopt;
    }
    if (auto *i1 = std::get_if<ArchIntervalComplement>(&s1)) {
        if (auto *i2 = std::get_if<ArchIntervalComplement>(&s2))
            return !(i2->a < i1->a) && !(i1->b < i2->b);
        return std::nullopt;
    }
    if (auto *c1 = std::get_if<ArchCurveComplement>(&s1)) {
        if (auto *c2 = std::get_if<ArchCurveComplement>(&s2))
            return polyline_contains(c1->vertices, c2->vertices);
        return std::nullopt;
    }
    if (auto *l1 = std::get_if<Lemniscate>(&s1))
        if (auto *l2 = std::get_if<Lemniscate>(&s2))
            return lemniscate_contained(*l1, *l2, place);
    return std::nullopt;
}

} // namespace

double Endpoint::to_double() const {
    if (!value)
        return sign * std::numeric_limits<double>::infinity();
    return value->get_d();
}

std::string Endpoint::to_string() const {
    if (!value)
        return sign < 0 ? "-inf" : "inf";
    return adelic::to_string(*value);
}

bool operator<(const Endpoint &a, const Endpoint &b) {
    if (a.is_infinite() || b.is_infinite()) {
        int ka = a.is_infinite() ? a.sign : 0, kb = b.is_infinite() ? b.sign : 0;
        return ka < kb;
    }
    return *a.value < *b.value;
}

std::string shape_name(const DomainShape &shape) {
    switch (shape.index()) {
    case 0: return "disk";
    case 1: return "lemniscate";
    case 2: return "arch-disk";
    case 3: return "interval-complement";
    default: return "curve-complement";
    }
}

LogValue cap_log_norm_disk(const LogValue &log_r) { return -log_r; }

Rational lemniscate_leading_coefficient(const Lemniscate &f) { return reduce(f).lead; }

LogValue cap_log_norm_lemniscate(const Lemniscate &f, const Place &place) {
    Rational c = reduce(f).lead;
    return (-log_abs_at(c, place)).scaled(Rational(1, static_cast<long>(f.order)));
}

LogValue green_log_eval(const DomainSpec &domain, const Rational &x) {
    const Place &place = domain.place;
    auto zero = [&] { return place.is_finite() ? LogValue::at_prime(place.prime(), 0) : LogValue::real(0.0); };
    if (auto *l = std::get_if<Lemniscate>(&domain.shape)) {
        ReducedLemniscate r = reduce(*l);
        if (x == l->pole)
            throw Error(ErrorCode::EvaluationAtPole, "x is the pole " + to_string(x));
        Rational fx = evaluate_ratio(r.num, r.den, x);
        if (fx == 0)
            return zero();
        LogValue v = log_abs_at(fx, place).scaled(Rational(1, static_cast<long>(l->order)));
        return max(v, zero());
    }
    if (auto *d = std::get_if<PadicDisk>(&domain.shape)) {
        if (!place.is_finite())
            throw Error(ErrorCode::UnsupportedShape, "p-adic disk at the archimedean place");
        if (x == d->center)
            throw Error(ErrorCode::EvaluationAtPole, "x is the disk center");
        LogValue v = LogValue::at_prime(place.prime(), d->log_radius) - log_abs_at(Rational(x - d->center), place);
        return max(v, zero());
    }
    if (auto *d = std::get_if<ArchDisk>(&domain.shape)) {
        if (x == d->center)
            throw Error(ErrorCode::EvaluationAtPole, "x is the disk center");
        return LogValue::real(std::max(0.0, log_abs(d->radius) - log_abs(Rational(x - d->center))));
    }
    throw Error(ErrorCode::UnsupportedShape, "Green function needs a disk or a lemniscate, got " + shape_name(domain.shape));
}

CapacityResult archimedean_capacity(const CompactShape &shape, std::size_t fekete_points) {
    if (auto *d = std::get_if<CompactDisk>(&shape)) {
        if (!(d->radius > 0))
            throw Error(ErrorCode::UnsupportedShape, "disk radius must be positive");
        return {std::log(d->radius), 0.0, "closed-form: log r", {}};
    }
    if (auto *iv = std::get_if<CompactInterval>(&shape)) {
        if (!(iv->b > iv->a) || !std::isfinite(iv->a) || !std::isfinite(iv->b))
            throw Error(ErrorCode::UnsupportedShape, "interval must be bounded with a < b");
        return {std::log((iv->b - iv->a) / 4.0), 0.0, "closed-form: log((b-a)/4)", {}};
    }
    const auto &c = std::get<CompactCurve>(shape);
    if (c.vertices.size() > 64)
        throw Error(ErrorCode::UnsupportedShape, "at most 64 vertices");
    TransfiniteEstimate est = transfinite_diameter(polyline_curve(c.vertices), fekete_points);
    return {est.log_capacity, est.error_estimate, "fekete-extrapolated", est.ladder};
}

PlaceNorm place_log_norm(const DomainSpec &domain, const Rational &base) {
    const Place &place = domain.place;
    if (auto *d = std::get_if<PadicDisk>(&domain.shape)) {
        if (!place.is_finite())
            throw Error(ErrorCode::UnsupportedShape, "p-adic disk at the archimedean place");
        if (!in_padic_disk(base, *d, place.prime()))
            throw Error(ErrorCode::BasePointOutsideDomain,
                        "base " + to_string(base) + " outside the disk at p = " + std::to_string(place.prime()));
        return finite_value(place, cap_log_norm_disk(LogValue::at_prime(place.prime(), d->log_radius)), "disk");
    }
    if (auto *l = std::get_if<Lemniscate>(&domain.shape)) {
        if (l->pole != base)
            throw Error(ErrorCode::PoleMismatch,
                        "lemniscate pole " + to_string(l->pole) + " is not the base point " + to_string(base));
        if (place.is_finite())
            return finite_value(place, cap_log_norm_lemniscate(*l, place), "lemniscate");
        return arch_closed_form(place, rabs(reduce(*l).lead), l->order, "lemniscate");
    }
    if (place.is_finite())
        throw Error(ErrorCode::UnsupportedShape, shape_name(domain.shape) + " at a finite place");

    if (auto *d = std::get_if<ArchDisk>(&domain.shape)) {
        if (d->radius <= 0)
            throw Error(ErrorCode::UnsupportedShape, "disk radius must be positive");
        Rational dist = rabs(base - d->center);
        if (dist >= d->radius)
            throw Error(ErrorCode::BasePointOutsideDomain, "base point outside the archimedean disk");
        // conformal radius of D(c, R) at the base point
        Rational cr = (d->radius * d->radius - dist * dist) / d->radius;
        return arch_closed_form(place, cr, 1, "disk: conformal radius (R^2 - d^2)/R");
    }
    if (auto *iv = std::get_if<ArchIntervalComplement>(&domain.shape)) {
        if (!(iv->a < iv->b))
            throw Error(ErrorCode::UnsupportedShape, "interval needs a < b");
        if (iv->a.is_infinite() && iv->b.is_infinite())
            throw Error(ErrorCode::UnsupportedShape, "the whole real line is not supported");
        if (in_interval(base, *iv))
            throw Error(ErrorCode::BasePointOutsideDomain, "base point lies on the removed interval");
        // Route 1 (exact): u = 1/(t - P) maps [a, b] to a real interval of
        // length ell, whose capacity ell/4 equals 1 / (conformal radius).
        auto inv = [&](const Endpoint &e) { return e.is_infinite() ? Rational(0) : Rational(1 / (*e.value - base)); };
        Rational ell = rabs(inv(iv->b) - inv(iv->a));
        Rational cr = Rational(4) / ell;
        PlaceNorm n = arch_closed_form(place, cr, 1, "interval-complement: inversion to a segment");
        // Route 2 (float): explicit conformal maps onto a half-plane (rays) or
        // onto the exterior of the unit disk (segments).
        double P = base.get_d();
        double cr2;
        if (iv->b.is_infinite() || iv->a.is_infinite()) {
            bool right = iv->b.is_infinite();
            double a = right ? iv->a.to_double() : -iv->b.to_double();
            double z = right ? P : -P;
            Complex w0 = std::sqrt(Complex(a - z, 0.0)); // onto Re w > 0
            cr2 = 4.0 * std::abs(w0) * std::real(w0);
        } else {
            double a = iv->a.to_double(), b = iv->b.to_double();
            double u0 = (2.0 * P - a - b) / (b - a);
            double s = std::sqrt(u0 * u0 - 1.0);
            double zeta = u0 + (u0 > 0 ? s : -s); // onto |zeta| > 1
            cr2 = (zeta * zeta - 1.0) * s / std::fabs(zeta) * (b - a) / 2.0;
        }
        n.cross_check = -std::log(cr2);
        n.lo = std::min(n.lo, *n.cross_check - kUlpPad * 64);
        n.hi = std::max(n.hi, *n.cross_check + kUlpPad * 64);
        if (n.exact) {
            n.lo = 0.0;
            n.hi = 0.0;
        }
        return n;
    }
    const auto &cc = std::get<ArchCurveComplement>(domain.shape);
    if (cc.vertices.size() < 2 || cc.vertices.size() > 64)
        throw Error(ErrorCode::UnsupportedShape, "curve needs 2..64 vertices");
    Complex P(base.get_d(), 0.0);
    for (std::size_t j = 0; j + 1 < cc.vertices.size(); ++j)
        if (point_segment_distance(P, cc.vertices[j], cc.vertices[j + 1]) < 1e-12)
            throw Error(ErrorCode::BasePointOutsideDomain, "base point lies on the removed curve");
    // log ||d/dt||_{P, Omega} = log cap(1/(K - P))
    TransfiniteEstimate est = transfinite_diameter(inverted_curve(polyline_curve(cc.vertices), P));
    PlaceNorm n{place, LogValue::real(est.log_capacity), false, 0, 0, "curve-complement: inversion + fekete",
                std::nullopt, std::nullopt};
    double err = std::isfinite(est.error_estimate) ? est.error_estimate : 1e-2;
    n.lo = est.log_capacity - err;
    n.hi = est.log_capacity + err;
    return n;
}

DomainSpec AdelicTube::domain_at(const Place &place) const {
    auto it = places.find(place);
    if (it != places.end())
        return {place, it->second};
    if (place.is_finite())
        return {place, PadicDisk{base, Rational(0)}};
    return {place, ArchDisk{base, Rational(1)}};
}

void validate_tube(const AdelicTube &tube) {
    for (const auto &[place, shape] : tube.places) {
        if (place.is_finite() && is_arch_shape(shape))
            throw Error(ErrorCode::UnsupportedShape, shape_name(shape) + " at p = " + std::to_string(place.prime()));
        if (place.is_archimedean() && is_finite_shape(shape))
            throw Error(ErrorCode::UnsupportedShape, "p-adic disk at the archimedean place");
    }
}

const char *to_string(DegreeSign s) {
    switch (s) {
    case DegreeSign::Positive: return "positive";
    case DegreeSign::Negative: return "negative";
    case DegreeSign::Boundary: return "boundary";
    }
    return "?";
}

std::optional<int> exact_log_sign(const std::vector<std::pair<Rational, Rational>> &terms) {
    Integer L = 1;
    for (const auto &[b, e] : terms) {
        if (b <= 0)
            throw Error(ErrorCode::InvalidArgument, "log of a non-positive number");
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.get_den_mpz_t());
    }
    // bit budget for the integer comparison
    double bits = 0;
    for (const auto &[b, e] : terms) {
        Rational E = e * Rational(L);
        double mag = std::fabs(E.get_d());
        bits += mag * static_cast<double>(mpz_sizeinbase(b.get_num_mpz_t(), 2) + mpz_sizeinbase(b.get_den_mpz_t(), 2));
    }
    if (bits > 1 << 24)
        return std::nullopt;
    Integer left = 1, right = 1;
    for (const auto &[b, e] : terms) {
        Integer E = Rational(e * Rational(L)).get_num();
        if (E == 0 || b == 1)
            continue;
        unsigned long k = Integer(abs(E)).get_ui();
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), k);
        mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), k);
        if (E > 0) {
            left *= n;
            right *= d;
        } else {
            left *= d;
            right *= n;
        }
    }
    return cmp(left, right) > 0 ? 1 : (cmp(left, right) < 0 ? -1 : 0);
}

ArakelovDegreeReport arakelov_degree(const AdelicTube &tube) {
    validate_tube(tube);
    ArakelovDegreeReport rep;
    std::vector<std::pair<Rational, Rational>> terms;
    bool all_closed = true;
    for (const auto &[place, shape] : tube.places) {
        PlaceNorm n = place_log_norm({place, shape}, tube.base);
        Contribution c{place, -n.log_norm, n.exact, -n.hi, -n.lo, n.method, std::nullopt};
        if (n.cross_check)
            c.cross_check = -*n.cross_check;
        if (place.is_finite()) {
            const Rational &k = c.value.coeff();
            if (k != 0) {
                rep.exact_part[place.prime()] += k;
                terms.push_back({Rational(static_cast<long>(place.prime())), k});
            }
        } else {
            if (n.closed_form) {
                // contribution (1/m) log q
                terms.push_back({n.closed_form->first, Rational(1, static_cast<long>(n.closed_form->second))});
            } else {
                all_closed = false;
            }
            if (!n.exact) {
                rep.arch_lo += c.lo;
                rep.arch_hi += c.hi;
            }
        }
        rep.contributions.push_back(std::move(c));
    }
    for (const auto &[p, k] : rep.exact_part)
        rep.exact_value += k.get_d() * std::log(static_cast<double>(p));
    auto [elo, ehi] = rep.exact_part.empty() ? std::pair{0.0, 0.0} : widen(rep.exact_value);
    rep.total = rep.exact_value + 0.5 * (rep.arch_lo + rep.arch_hi);
    rep.total_lo = elo + rep.arch_lo;
    rep.total_hi = ehi + rep.arch_hi;

    std::optional<int> sign = all_closed ? exact_log_sign(terms) : std::nullopt;
    if (sign) {
        rep.decided_exactly = true;
        rep.exact_zero = *sign == 0;
        rep.sign = *sign > 0 ? DegreeSign::Positive : (*sign < 0 ? DegreeSign::Negative : DegreeSign::Boundary);
        if (rep.exact_zero) {
            rep.total = 0.0;
            rep.total_lo = rep.total_hi = 0.0;
        }
    } else {
        rep.decided_exactly = false;
        rep.sign = rep.total_lo > 0 ? DegreeSign::Positive
                                    : (rep.total_hi < 0 ? DegreeSign::Negative : DegreeSign::Boundary);
    }
    return rep;
}

MonotonicityReport monotonicity_check(const AdelicTube &tube, const AdelicTube &enlarged) {
    validate_tube(tube);
    validate_tube(enlarged);
    if (tube.base != enlarged.base)
        throw Error(ErrorCode::InvalidArgument, "tubes have different base points");
    std::vector<Place> places;
    for (const auto &kv : tube.places)
        places.push_back(kv.first);
    for (const auto &kv : enlarged.places)
        places.push_back(kv.first);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());

    MonotonicityReport rep{{}, true};
    for (const Place &place : places) {
        DomainSpec small = tube.domain_at(place), big = enlarged.domain_at(place);
        auto inside = contained(small.shape, big.shape, place);
        if (!inside)
            throw Error(ErrorCode::ContainmentViolation,
                        "cannot certify containment at place " + place.label() + " (" + shape_name(small.shape) +
                            " in " + shape_name(big.shape) + ")");
        if (!*inside)
            throw Error(ErrorCode::ContainmentViolation, "domain at place " + place.label() + " is not contained");
        MonotonicityEntry e{place, place_log_norm(small, tube.base), place_log_norm(big, tube.base), 0.0, std::nullopt,
                            true};
        if (place.is_finite()) {
            Rational drop = e.before.log_norm.coeff() - e.after.log_norm.coeff();
            e.exact_drop = drop;
            e.drop = drop.get_d() * std::log(static_cast<double>(place.prime()));
            e.holds = drop >= 0;
        } else {
            e.drop = e.before.log_norm.to_double() - e.after.log_norm.to_double();
            e.holds = e.after.lo <= e.before.hi;
        }
        rep.holds = rep.holds && e.holds;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace adelic
