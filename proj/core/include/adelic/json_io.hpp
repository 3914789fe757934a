// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON encoding of inputs and reports. Rationals travel as strings ("-1/4"),
// infinities as "+inf" / "-inf"; object keys keep insertion order so that
// reports are byte-stable.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "adelic/budget.hpp"
#include "adelic/capacity.hpp"
#include "adelic/certifier.hpp"
#include "adelic/equilibrium.hpp"
#include "adelic/error.hpp"
#include "adelic/filtration.hpp"
#include "adelic/padic.hpp"

namespace adelic {

using Json = nlohmann::ordered_json;

/// Reads a JSON document from a file. Throws ParseError.
Json read_json_file(const std::string &path);
/// Pretty-printed (indent 2) with a trailing newline.
std::string dump_json(const Json &j);

Json rational_to_json(const Rational &q);
/// Accepts "a/b" strings and JSON integers. Throws ParseError.
Rational rational_from_json(const Json &j);

Json polynomial_to_json(const Polynomial &p);
Polynomial polynomial_from_json(const Json &j);

Json place_to_json(const Place &place);
/// "inf" / "archimedean" or a prime (number or string).
Place place_from_json(const Json &j);

Json log_value_to_json(const LogValue &v);
LogValue log_value_from_json(const Json &j);

/// {"truncation": N, "coeffs": [...], "identity": {"kind": ..., ...}}. Either
/// the coefficient list or an identity with a rule (plus "truncation") must
/// be present; "polynomial" is read as rational(P, 1).
Json series_to_json(const PowerSeriesTrunc &phi);
PowerSeriesTrunc series_from_json(const Json &j);

Json tube_to_json(const AdelicTube &tube);
AdelicTube tube_from_json(const Json &j);

/// Graph file: components (name, multiplicity), Q, and for the equilibrium
/// problem T (names or indices) and the incidence d.
struct EquilibriumInput {
    IntersectionGraph graph;
    HorizontalIncidence incidence;
    std::vector<std::size_t> T;
};
EquilibriumInput equilibrium_input_from_json(const Json &j);
Json graph_to_json(const IntersectionGraph &g);

SizeRule size_rule_from_json(const Json &j);
RadiusRule radius_rule_from_json(const Json &j);

Json to_json(const Error &e);
Json to_json(const NewtonPolygon &np);
Json to_json(const GaussNorm &g);
Json to_json(const SizeResult &s);
Json to_json(const RadiusResult &r);
Json to_json(const SizeRadiusReport &r);
Json to_json(const ConvergenceDiagnostic &d);
Json to_json(const EquilibriumSolution &s);
Json to_json(const PlaceNorm &n);
Json to_json(const CapacityResult &c);
Json to_json(const ArakelovDegreeReport &r);
Json to_json(const MonotonicityReport &r);
Json to_json(const FiltrationTable &t);
Json to_json(const JetNormTable &t);
Json to_json(const RhoResult &r);
Json to_json(const HankelOracle &o);
Json to_json(const PadeResult &r);
Json to_json(const Certificate &c);

} // namespace adelic
