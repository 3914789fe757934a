// SPDX-License-Identifier: Apache-2.0
#include "adelic/json_io.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <sstream>

namespace adelic {

namespace {

[[noreturn]] void parse_fail(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

const Json &require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

Json real_to_json(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "+inf" : "-inf";
    return x == 0.0 ? 0.0 : x;
}

Json rationals_to_json(const std::vector<Rational> &v) {
    Json a = Json::array();
    for (const auto &q : v)
        a.push_back(rational_to_json(q));
    return a;
}

std::vector<Rational> rationals_from_json(const Json &j) {
    if (!j.is_array())
        parse_fail("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto &e : j)
        out.push_back(rational_from_json(e));
    return out;
}

long get_long(const Json &j, const char *key, long fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number_integer())
        parse_fail(std::string("\"") + key + "\" must be an integer");
    return j.at(key).get<long>();
}

Json endpoint_to_json(const Endpoint &e) {
    if (e.is_infinite())
        return e.sign < 0 ? "-inf" : "+inf";
    return rational_to_json(*e.value);
}

Endpoint endpoint_from_json(const Json &j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf")
            return Endpoint::infinity(1);
        if (s == "-inf")
            return Endpoint::infinity(-1);
    }
    return Endpoint::at(rational_from_json(j));
}

SeriesIdentity identity_from_json(const Json &j, long &shift_out) {
    Json spec = j.is_string() ? Json{{"kind", j}} : j;
    if (!spec.is_object())
        parse_fail("identity must be a string or an object");
    std::string kind = require(spec, "kind").get<std::string>();
    long shift = get_long(spec, "shift", 0);
    shift_out = shift;
    if (kind == "log1p")
        return SeriesIdentity::log1p(shift);
    if (kind == "expm1")
        return SeriesIdentity::expm1(shift);
    if (kind == "exp")
        return SeriesIdentity::exp(shift);
    if (kind == "geometric")
        return SeriesIdentity::geometric(spec.contains("a") ? rational_from_json(spec.at("a")) : Rational(1), shift);
    if (kind == "central-binomial")
        return SeriesIdentity::central_binomial(shift);
    if (kind == "rational")
        return SeriesIdentity::rational(polynomial_from_json(require(spec, "num")),
                                        polynomial_from_json(require(spec, "den")), shift);
    if (kind == "polynomial")
        return SeriesIdentity::rational(polynomial_from_json(require(spec, "coeffs")), Polynomial::constant(1), shift);
    if (kind == "user")
        return SeriesIdentity::user(spec.value("label", std::string("user")));
    parse_fail("unknown identity kind \"" + kind + "\"");
}

Json identity_to_json(const SeriesIdentity &id) {
    Json j;
    j["kind"] = id.name();
    switch (id.kind()) {
    case SeriesIdentity::Kind::Geometric: j["a"] = rational_to_json(id.ratio()); break;
    case SeriesIdentity::Kind::RationalFunction:
        j["num"] = polynomial_to_json(id.numerator());
        j["den"] = polynomial_to_json(id.denominator());
        break;
    case SeriesIdentity::Kind::User: j["label"] = id.label(); break;
    default: break;
    }
    if (id.kind() != SeriesIdentity::Kind::User)
        j["shift"] = id.shift();
    return j;
}

Json shape_to_json(const DomainShape &shape) {
    Json j;
    std::visit(
        [&](const auto &s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, PadicDisk>) {
                j["shape"] = "disk";
                j["center"] = rational_to_json(s.center);
                j["log_radius"] = rational_to_json(s.log_radius);
            } else if constexpr (std::is_same_v<S, Lemniscate>) {
                j["shape"] = "lemniscate";
                j["num"] = polynomial_to_json(s.num);
                j["den"] = polynomial_to_json(s.den);
                j["pole"] = rational_to_json(s.pole);
                j["order"] = s.order;
            } else if constexpr (std::is_same_v<S, ArchDisk>) {
                j["shape"] = "disk";
                j["center"] = rational_to_json(s.center);
                j["radius"] = rational_to_json(s.radius);
            } else if constexpr (std::is_same_v<S, ArchIntervalComplement>) {
                j["shape"] = "interval-complement";
                j["a"] = endpoint_to_json(s.a);
                j["b"] = endpoint_to_json(s.b);
            } else {
                j["shape"] = "curve-complement";
                Json v = Json::array();
                for (const auto &z : s.vertices)
                    v.push_back(Json::array({z.real(), z.imag()}));
                j["vertices"] = v;
            }
        },
        shape);
    return j;
}

DomainShape shape_from_json(const Json &j, const Place &place) {
    std::string shape = require(j, "shape").get<std::string>();
    Rational center = j.contains("center") ? rational_from_json(j.at("center")) : Rational(0);
    if (shape == "disk") {
        if (place.is_finite()) {
            if (j.contains("log_radius"))
                return PadicDisk{center, rational_from_json(j.at("log_radius"))};
            // radius given as a power of p
            Rational r = rational_from_json(require(j, "radius"));
            Valuation v = padic_valuation(r, place.prime());
            if (v.is_infinite() || r < 0)
                parse_fail("radius must be positive");
            long e = static_cast<long>(v.value());
            Rational pe = 1;
            for (long k = 0; k < std::labs(e); ++k)
                pe *= Rational(static_cast<unsigned long>(place.prime()));
            if (e < 0)
                pe = 1 / pe;
            if (pe != r)
                parse_fail("a p-adic disk radius must be an integral power of p (use \"log_radius\")");
            return PadicDisk{center, Rational(e)};
        }
        return ArchDisk{center, rational_from_json(require(j, "radius"))};
    }
    if (shape == "lemniscate") {
        Lemniscate f{polynomial_from_json(require(j, "num")), polynomial_from_json(require(j, "den")),
                     j.contains("pole") ? rational_from_json(j.at("pole")) : Rational(0),
                     static_cast<unsigned>(get_long(j, "order", 1))};
        return f;
    }
    if (shape == "interval-complement")
        return ArchIntervalComplement{endpoint_from_json(require(j, "a")), endpoint_from_json(require(j, "b"))};
    if (shape == "curve-complement") {
        ArchCurveComplement c;
        for (const auto &v : require(j, "vertices")) {
            if (!v.is_array() || v.size() != 2)
                parse_fail("curve vertices are [re, im] pairs");
            c.vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
        }
        return c;
    }
    parse_fail("unknown shape \"" + shape + "\"");
}

// Nested form: {"disk": {...}} | {"lemniscate": {...}} | {"interval": [a, b],
// "complement": true} | {"polyline" | "finite-set": [[re, im], ...], "complement": true}.
DomainShape nested_shape_from_json(const Json &shape, const Place &place) {
    if (!shape.is_object())
        parse_fail("shape must be an object");
    if (shape.contains("disk")) {
        Json flat = shape.at("disk");
        flat["shape"] = "disk";
        if (flat.contains("log_radius") && flat.at("log_radius").is_object()) {
            if (!place.is_finite())
                parse_fail("archimedean disks take \"radius\"");
            flat["log_radius"] = require(flat.at("log_radius"), "coeff");
        }
        return shape_from_json(flat, place);
    }
    if (shape.contains("lemniscate")) {
        Json flat = shape.at("lemniscate");
        flat["shape"] = "lemniscate";
        return shape_from_json(flat, place);
    }
    if (shape.contains("interval")) {
        const Json &iv = shape.at("interval");
        if (!iv.is_array() || iv.size() != 2)
            parse_fail("interval is [a, b]");
        if (!shape.value("complement", true))
            parse_fail("only complements of intervals are domains");
        return ArchIntervalComplement{endpoint_from_json(iv[0]), endpoint_from_json(iv[1])};
    }
    for (const char *key : {"polyline", "finite-set"}) {
        if (!shape.contains(key))
            continue;
        Json flat{{"shape", "curve-complement"}, {"vertices", shape.at(key)}};
        return shape_from_json(flat, place);
    }
    parse_fail("unknown shape " + shape.dump());
}

Json nested_shape_to_json(const DomainShape &shape) {
    Json flat = shape_to_json(shape);
    std::string kind = flat.at("shape").get<std::string>();
    flat.erase("shape");
    if (kind == "disk" && flat.contains("log_radius"))
        flat["log_radius"] = Json{{"coeff", flat.at("log_radius")}};
    if (kind == "interval-complement")
        return Json{{"interval", Json::array({flat.at("a"), flat.at("b")})}, {"complement", true}};
    if (kind == "curve-complement")
        return Json{{"polyline", flat.at("vertices")}, {"complement", true}};
    return Json{{kind, flat}};
}

Json contribution_to_json(const Contribution &c) {
    Json j;
    j["place"] = place_to_json(c.place);
    j["log_radius"] = log_value_to_json(c.value);
    j["exact"] = c.exact;
    j["lo"] = real_to_json(c.lo);
    j["hi"] = real_to_json(c.hi);
    j["method"] = c.method;
    if (c.cross_check)
        j["cross_check"] = real_to_json(*c.cross_check);
    return j;
}

Json jet_entry_to_json(const JetNormEntry &e) {
    Json j;
    j["D"] = e.D;
    j["i"] = e.i;
    j["log_norm"] = log_value_to_json(e.log_norm);
    j["witness"] = rationals_to_json(e.witness);
    return j;
}

} // namespace

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        parse_fail("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        parse_fail(path + ": " + e.what());
    }
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational &q) { return to_string(q); }

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    parse_fail("expected a rational string, got " + j.dump());
}

Json polynomial_to_json(const Polynomial &p) { return rationals_to_json(p.coeffs()); }

Polynomial polynomial_from_json(const Json &j) { return Polynomial(rationals_from_json(j)); }

Json place_to_json(const Place &place) { return place.label(); }

Place place_from_json(const Json &j) {
    if (j.is_number_unsigned() || j.is_number_integer())
        return Place::finite(j.get<std::uint64_t>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "archimedean")
            return Place::archimedean();
        try {
            std::size_t used = 0;
            unsigned long long p = std::stoull(s, &used);
            if (used == s.size())
                return Place::finite(p);
        } catch (const std::logic_error &) {
        }
    }
    parse_fail("invalid place " + j.dump());
}

Json log_value_to_json(const LogValue &v) {
    Json j;
    if (v.prime() != 0)
        j["prime"] = v.prime();
    const char *key = v.prime() != 0 ? "coeff" : "real";
    switch (v.kind()) {
    case LogValue::Kind::PrimeMultiple: j[key] = rational_to_json(v.coeff()); break;
    case LogValue::Kind::Real: j[key] = real_to_json(v.to_double()); break;
    case LogValue::Kind::PlusInfinity: j[key] = "+inf"; break;
    case LogValue::Kind::MinusInfinity: j[key] = "-inf"; break;
    }
    return j;
}

LogValue log_value_from_json(const Json &j) {
    std::uint64_t p = j.contains("prime") ? place_from_json(j.at("prime")).prime() : 0;
    const Json &val = p != 0 ? require(j, "coeff") : require(j, "real");
    if (val.is_string()) {
        std::string s = val.get<std::string>();
        if (s == "+inf" || s == "inf")
            return LogValue::plus_infinity(p);
        if (s == "-inf")
            return LogValue::minus_infinity(p);
    }
    if (p != 0)
        return LogValue::at_prime(p, rational_from_json(val));
    if (!val.is_number())
        parse_fail("archimedean log value must be a number");
    return LogValue::real(val.get<double>());
}

Json series_to_json(const PowerSeriesTrunc &phi) {
    Json j;
    j["truncation"] = phi.truncation();
    if (phi.identity())
        j["identity"] = identity_to_json(*phi.identity());
    j["coeffs"] = rationals_to_json(phi.coeffs());
    return j;
}

PowerSeriesTrunc series_from_json(const Json &j) {
    if (!j.is_object())
        parse_fail("series must be an object");
    std::optional<SeriesIdentity> id;
    long shift = 0;
    if (j.contains("identity") && !j.at("identity").is_null())
        id = identity_from_json(j.at("identity"), shift);
    if (j.contains("coeffs")) {
        auto c = rationals_from_json(j.at("coeffs"));
        if (j.contains("truncation")) {
            long n = get_long(j, "truncation", 0);
            if (n < 1 || static_cast<std::size_t>(n) + 1 != c.size())
                parse_fail("truncation must equal len(coeffs) - 1 >= 1");
        }
        return PowerSeriesTrunc(std::move(c), id);
    }
    if (!id || !id->has_rule())
        parse_fail("a series needs \"coeffs\" or an identity with a coefficient rule");
    long n = get_long(j, "truncation", -1);
    if (n < 1) {
        if (id->kind() == SeriesIdentity::Kind::RationalFunction && id->denominator().degree() == 0)
            n = std::max<long>(1, id->numerator().degree() + shift);
        else
            parse_fail("missing \"truncation\" (>= 1)");
    }
    return PowerSeriesTrunc::from_identity(*id, static_cast<std::size_t>(n));
}

Json tube_to_json(const AdelicTube &tube) {
    Json j;
    j["base"] = rational_to_json(tube.base);
    Json places = Json::array();
    for (const auto &[place, shape] : tube.places) {
        Json e;
        if (place.is_finite())
            e["prime"] = place.prime();
        else
            e["arch"] = true;
        e["shape"] = nested_shape_to_json(shape);
        places.push_back(e);
    }
    j["places"] = places;
    j["default"] = "unit-disk";
    return j;
}

AdelicTube tube_from_json(const Json &j) {
    AdelicTube tube;
    if (j.contains("base"))
        tube.base = rational_from_json(j.at("base"));
    if (j.contains("default") && j.at("default") != "unit-disk")
        parse_fail("the only cofinite default is \"unit-disk\"");
    if (j.contains("places")) {
        for (const auto &e : j.at("places")) {
            Place place = Place::archimedean();
            if (e.contains("place"))
                place = place_from_json(e.at("place"));
            else if (e.contains("prime"))
                place = place_from_json(e.at("prime"));
            else if (!e.value("arch", false))
                parse_fail("a tube entry needs \"place\", \"prime\" or \"arch\": true");
            if (tube.places.count(place))
                parse_fail("place " + place.label() + " listed twice");
            const Json &shape = require(e, "shape");
            tube.places.emplace(place, shape.is_object() ? nested_shape_from_json(shape, place) : shape_from_json(e, place));
        }
    }
    validate_tube(tube);
    return tube;
}

EquilibriumInput equilibrium_input_from_json(const Json &j) {
    EquilibriumInput in;
    bool per_component_d = false;
    std::vector<Rational> d;
    for (const auto &c : require(j, "components")) {
        in.graph.names.push_back(require(c, "name").get<std::string>());
        const Json &m = c.contains("m") ? c.at("m") : c.contains("multiplicity") ? c.at("multiplicity") : Json(1);
        Rational mq = rational_from_json(m);
        if (mq.get_den() != 1)
            parse_fail("multiplicities are integers");
        in.graph.multiplicities.push_back(mq.get_num());
        if (c.value("inT", false))
            in.T.push_back(in.graph.names.size() - 1);
        if (c.contains("d"))
            per_component_d = true;
        d.push_back(c.contains("d") ? rational_from_json(c.at("d")) : Rational(0));
    }
    for (const auto &row : require(j, "Q"))
        in.graph.Q.push_back(rationals_from_json(row));
    std::size_t n = in.graph.size();
    if (j.contains("d")) {
        if (per_component_d)
            parse_fail("give d either per component or as a list, not both");
        d = rationals_from_json(j.at("d"));
    }
    in.incidence.d = std::move(d);
    if (in.incidence.d.size() != n)
        parse_fail("d must have one entry per component");
    if (j.contains("T")) {
        if (!in.T.empty())
            parse_fail("give T either through inT flags or as a list, not both");
        for (const auto &t : j.at("T")) {
            if (t.is_number_integer()) {
                in.T.push_back(t.get<std::size_t>());
                continue;
            }
            auto name = t.get<std::string>();
            auto it = std::find(in.graph.names.begin(), in.graph.names.end(), name);
            if (it == in.graph.names.end())
                parse_fail("T names unknown component \"" + name + "\"");
            in.T.push_back(static_cast<std::size_t>(it - in.graph.names.begin()));
        }
    }
    return in;
}

Json graph_to_json(const IntersectionGraph &g) {
    Json j;
    Json comps = Json::array();
    for (std::size_t s = 0; s < g.size(); ++s)
        comps.push_back(Json{{"name", g.names[s]}, {"m", to_string(g.multiplicities[s])}});
    j["components"] = comps;
    Json Q = Json::array();
    for (const auto &row : g.Q)
        Q.push_back(rationals_to_json(row));
    j["Q"] = Q;
    return j;
}

namespace {

Pattern pattern_from_json(const Json &j) {
    Pattern pat;
    pat.alpha = j.contains("alpha") ? rational_from_json(j.at("alpha")) : Rational(1);
    std::string form = require(j, "pattern").get<std::string>();
    if (form == "1/(p-1)")
        pat.form = PatternForm::OverPMinus1;
    else if (form == "1/(p(p-1))")
        pat.form = PatternForm::OverPTimesPMinus1;
    else
        parse_fail("pattern must be \"1/(p-1)\" or \"1/(p(p-1))\"");
    return pat;
}

// {"2": "-1", "inf": 0.5}: coefficients of log p at primes, floats at inf.
std::map<Place, LogValue> place_values_from_json(const Json &j) {
    std::map<Place, LogValue> out;
    if (!j.is_object())
        parse_fail("expected an object keyed by place");
    for (const auto &[key, val] : j.items()) {
        Place place = place_from_json(Json(key));
        if (val.is_object())
            out.emplace(place, log_value_from_json(val));
        else if (place.is_finite())
            out.emplace(place, LogValue::at_prime(place.prime(), rational_from_json(val)));
        else if (val.is_number())
            out.emplace(place, LogValue::real(val.get<double>()));
        else
            parse_fail("archimedean value must be a number");
    }
    return out;
}

std::map<std::uint64_t, LogValue> prime_values(const std::map<Place, LogValue> &m) {
    std::map<std::uint64_t, LogValue> out;
    for (const auto &[place, v] : m) {
        if (!place.is_finite())
            parse_fail("size rules are indexed by primes");
        out.emplace(place.prime(), v);
    }
    return out;
}

} // namespace

SizeRule size_rule_from_json(const Json &j) {
    std::string form = require(j, "form").get<std::string>();
    if (form == "tabulated")
        return SizeRule::tabulated(prime_values(place_values_from_json(require(j, "values"))));
    if (form == "pattern")
        return SizeRule::pattern(pattern_from_json(j), j.contains("exceptional")
                                                           ? prime_values(place_values_from_json(j.at("exceptional")))
                                                           : std::map<std::uint64_t, LogValue>{});
    if (form == "derived")
        return SizeRule::derived(series_from_json(require(j, "series")));
    parse_fail("rule form must be tabulated, pattern or derived");
}

RadiusRule radius_rule_from_json(const Json &j) {
    std::string form = require(j, "form").get<std::string>();
    if (form == "tabulated")
        return RadiusRule::tabulated(place_values_from_json(require(j, "values")));
    if (form == "pattern")
        return RadiusRule::pattern(pattern_from_json(j), j.contains("exceptional")
                                                             ? place_values_from_json(j.at("exceptional"))
                                                             : std::map<Place, LogValue>{});
    if (form == "derived")
        return RadiusRule::derived(series_from_json(require(j, "series")));
    parse_fail("rule form must be tabulated, pattern or derived");
}

Json to_json(const Error &e) {
    Json j;
    j["error"] = std::string(e.name());
    j["message"] = e.what();
    return j;
}

Json to_json(const NewtonPolygon &np) {
    Json j;
    j["prime"] = np.prime;
    Json v = Json::array();
    for (const auto &x : np.vertices)
        v.push_back(Json{{"index", x.index}, {"valuation", rational_to_json(x.valuation)}});
    j["vertices"] = v;
    j["slopes"] = rationals_to_json(np.slopes);
    j["certified_segments"] = np.certified_segments;
    j["exactness"] = to_string(np.exactness);
    return j;
}

Json to_json(const GaussNorm &g) {
    Json j;
    j["log_norm"] = log_value_to_json(g.log_norm);
    j["exact"] = g.exactness == Exactness::Exact;
    j["horizon"] = g.horizon;
    return j;
}

Json to_json(const SizeResult &s) {
    Json j;
    j["log_size"] = log_value_to_json(s.log_size);
    j["exact"] = s.exactness == Exactness::Exact;
    return j;
}

Json to_json(const RadiusResult &r) {
    Json j;
    j["place"] = place_to_json(r.place);
    j["log_radius"] = log_value_to_json(r.log_radius);
    j["exact"] = r.exactness == Exactness::Exact;
    return j;
}

Json to_json(const SizeRadiusReport &r) {
    Json j;
    j["radius"] = to_json(r.radius);
    j["size"] = to_json(r.size);
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    j["exact"] = r.exact;
    return j;
}

Json to_json(const ConvergenceDiagnostic &d) {
    Json j;
    j["verdict"] = to_string(d.verdict);
    Json ps = Json::array();
    for (const auto &p : d.partial_sums)
        ps.push_back(Json{{"bound", p.bound}, {"sum", real_to_json(p.sum)}});
    j["partial_sums"] = ps;
    j["rationale"] = d.rationale;
    if (d.comparison) {
        const auto &c = *d.comparison;
        j["comparison"] = Json{{"reference", c.reference},
                               {"expected", real_to_json(c.expected)},
                               {"residual", real_to_json(c.residual)},
                               {"margin", real_to_json(c.margin)},
                               {"within_margin", c.within_margin}};
    }
    j["refused_primes"] = d.refused_primes;
    return j;
}

Json to_json(const EquilibriumSolution &s) {
    Json j;
    Json comps = Json::array();
    for (std::size_t k = 0; k < s.graph.size(); ++k) {
        Json c;
        c["name"] = s.graph.names[k];
        c["m"] = to_string(s.graph.multiplicities[k]);
        c["inT"] = s.in_T(k);
        c["d"] = rational_to_json(s.incidence.d[k]);
        c["c"] = rational_to_json(s.c[k]);
        if (!s.in_T(k))
            c["flux"] = rational_to_json(s.flux[k]);
        comps.push_back(c);
    }
    j["components"] = comps;
    Json Q = Json::array();
    for (const auto &row : s.graph.Q)
        Q.push_back(rationals_to_json(row));
    j["Q"] = Q;
    j["flux_total"] = rational_to_json(s.flux_total());
    j["t_pairing_total"] = rational_to_json(s.t_pairing_total());
    j["degree"] = rational_to_json(s.degree());
    j["support_in_T"] = s.support_in_T();
    j["flux_check"] = s.flux_total() == s.t_pairing_total() && (!s.support_in_T() || s.flux_total() == s.degree());
    j["flux_equals_degree"] = s.flux_total() == s.degree();
    return j;
}

Json to_json(const PlaceNorm &n) {
    Json j;
    j["place"] = place_to_json(n.place);
    j["log_norm"] = log_value_to_json(n.log_norm);
    j["exact"] = n.exact;
    j["lo"] = real_to_json(n.lo);
    j["hi"] = real_to_json(n.hi);
    j["method"] = n.method;
    if (n.cross_check)
        j["cross_check"] = real_to_json(*n.cross_check);
    if (n.closed_form)
        j["closed_form"] = Json{{"q", rational_to_json(n.closed_form->first)}, {"m", n.closed_form->second}};
    return j;
}

Json to_json(const CapacityResult &c) {
    Json j;
    j["log_capacity"] = real_to_json(c.log_capacity);
    j["capacity"] = real_to_json(std::exp(c.log_capacity));
    j["error_estimate"] = real_to_json(c.error_estimate);
    j["method"] = c.method;
    if (!c.ladder.empty()) {
        Json l = Json::array();
        for (const auto &[n, v] : c.ladder)
            l.push_back(Json{{"n", n}, {"log_delta", real_to_json(v)}});
        j["ladder"] = l;
    }
    return j;
}

Json to_json(const ArakelovDegreeReport &r) {
    Json j;
    j["total_sign"] = to_string(r.sign);
    j["total"] = real_to_json(r.total);
    j["total_lo"] = real_to_json(r.total_lo);
    j["total_hi"] = real_to_json(r.total_hi);
    j["decided_exactly"] = r.decided_exactly;
    j["exact_zero"] = r.exact_zero;
    Json ex = Json::object();
    for (const auto &[p, q] : r.exact_part)
        ex[std::to_string(p)] = rational_to_json(q);
    j["exact_part"] = ex;
    j["arch_lo"] = real_to_json(r.arch_lo);
    j["arch_hi"] = real_to_json(r.arch_hi);
    Json c = Json::array();
    for (const auto &x : r.contributions)
        c.push_back(contribution_to_json(x));
    j["contributions"] = c;
    return j;
}

Json to_json(const MonotonicityReport &r) {
    Json j;
    j["holds"] = r.holds;
    Json e = Json::array();
    for (const auto &x : r.entries) {
        Json k;
        k["place"] = place_to_json(x.place);
        k["before"] = to_json(x.before);
        k["after"] = to_json(x.after);
        k["drop"] = real_to_json(x.drop);
        if (x.exact_drop)
            k["exact_drop"] = rational_to_json(*x.exact_drop);
        k["holds"] = x.holds;
        e.push_back(k);
    }
    j["entries"] = e;
    return j;
}

Json to_json(const FiltrationTable &t) {
    Json j;
    j["D"] = t.D;
    j["i_max"] = t.i_max;
    j["ranks"] = t.ranks;
    j["limit_dimension"] = t.limit_dimension;
    j["stationary_index"] = t.stationary_index ? Json(*t.stationary_index) : Json(nullptr);
    bool nonempty = false;
    for (unsigned r : t.ranks)
        nonempty = nonempty || r > 0;
    j["algebraicity_ratio"] = nonempty ? rational_to_json(algebraicity_ratio(t)) : Json(nullptr);
    Json b = Json::array();
    for (const auto &v : t.limit_basis)
        b.push_back(rationals_to_json(v));
    j["limit_basis"] = b;
    return j;
}

Json to_json(const JetNormTable &t) {
    Json j;
    j["place"] = place_to_json(t.place);
    j["integral_coefficients"] = t.integral_coefficients;
    Json e = Json::array();
    for (const auto &x : t.entries)
        e.push_back(jet_entry_to_json(x));
    j["entries"] = e;
    return j;
}

Json to_json(const RhoResult &r) {
    Json j;
    j["rho_window"] = log_value_to_json(r.rho_window);
    j["canonical_log_norm"] = log_value_to_json(r.canonical_log_norm);
    j["qualifying"] = r.qualifying;
    j["argmax"] = r.argmax ? jet_entry_to_json(*r.argmax) : Json(nullptr);
    return j;
}

Json to_json(const HankelOracle &o) {
    Json j;
    j["kind"] = to_string(o.kind);
    if (o.kind == HankelOracle::Kind::Rational) {
        j["m"] = o.m;
        j["n"] = o.n;
    }
    j["k_max"] = o.k_max;
    j["detail"] = o.detail;
    return j;
}

Json to_json(const PadeResult &r) {
    Json j;
    j["P"] = polynomial_to_json(r.P);
    j["Q"] = polynomial_to_json(r.Q);
    j["verified"] = r.verified;
    j["first_mismatch"] = r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr);
    return j;
}

Json to_json(const Certificate &c) {
    Json j;
    j["status"] = to_string(c.status);
    j["boundary"] = c.boundary;
    j["meromorphy_asserted"] = c.meromorphy_asserted;
    j["degree"] = c.adelic_degree ? to_json(*c.adelic_degree) : Json(nullptr);
    j["oracle"] = to_json(c.oracle);
    j["reconstruction"] = c.reconstruction ? to_json(*c.reconstruction) : Json(nullptr);
    j["consistency"] = c.consistency;
    j["inconsistencies"] = c.inconsistencies;
    Json rb = Json::object();
    for (const auto &[p, b] : c.radii_bounds)
        rb[std::to_string(p)] = Json{{"log_radius", log_value_to_json(b.log_radius)},
                                     {"exact", b.exactness == Exactness::Exact}};
    j["radii_bounds"] = rb;
    return j;
}

} // namespace adelic
