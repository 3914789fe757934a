// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <string>

#include "adelic/certifier.hpp"
#include "adelic/error.hpp"
#include "adelic/json_io.hpp"
#include "adelic/padic.hpp"

using namespace adelic;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

std::string data(const std::string &name) { return std::string(ADELIC_TEST_DATA) + "/" + name; }

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("scalars") {
    CHECK(rational_from_json(Json("-3/6")) == q(-1, 2));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK(rational_from_json(Json("0.25")) == q(1, 4));
    CHECK(rational_to_json(q(2, 4)) == Json("1/2"));
    CHECK(code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { rational_from_json(Json("abc")); }) == ErrorCode::ParseError);

    for (const auto &v : {LogValue::at_prime(5, q(-1, 4)), LogValue::real(0.75), LogValue::minus_infinity(),
                          LogValue::plus_infinity(), LogValue::at_prime(3, q(0))})
        CHECK(log_value_from_json(log_value_to_json(v)) == v);
    CHECK(log_value_from_json(Json::parse(R"({"real": 1.5})")) == LogValue::real(1.5));

    for (const auto &pl : {Place::archimedean(), Place::finite(7)})
        CHECK(place_from_json(place_to_json(pl)) == pl);
    CHECK(place_from_json(Json("inf")) == Place::archimedean());
    CHECK(place_from_json(Json("11")) == Place::finite(11));
    CHECK(code_of([] { place_from_json(Json(12)); }) == ErrorCode::NotPrime);

    Polynomial p({q(1), q(-2, 3), q(0), q(5)});
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
}

TEST_CASE("series") {
    auto log1p = series_from_json(read_json_file(data("log1p.json")));
    CHECK(log1p.truncation() == 200);
    REQUIRE(log1p.identity());
    CHECK(log1p[3] == q(1, 3));
    auto back = series_from_json(series_to_json(log1p));
    CHECK(back.truncation() == log1p.truncation());
    for (std::size_t n = 0; n <= 200; ++n)
        CHECK(back[n] == log1p[n]);
    CHECK(dump_json(series_to_json(back)) == dump_json(series_to_json(log1p)));

    auto coeffs = series_from_json(Json::parse(R"({"coeffs": ["0", "1", "1/2", "1/4"]})"));
    CHECK(coeffs.truncation() == 3);
    CHECK(!coeffs.identity());
    auto poly = series_from_json(Json::parse(R"({"identity": {"kind": "polynomial", "coeffs": ["0", "2"]}, "truncation": 6})"));
    CHECK(poly[1] == 2);
    CHECK(poly[5] == 0);
    CHECK(code_of([] { series_from_json(Json::parse(R"({"identity": "nonsense", "truncation": 4})")); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { series_from_json(Json::parse(R"({"truncation": 4})")); }) == ErrorCode::ParseError);
}

TEST_CASE("tubes") {
    for (const char *name : {"disks.json", "unit.json", "disk_radius4.json", "disk_quarter.json", "ray_complement.json",
                             "overdeclared.json", "lemniscate.json"}) {
        CAPTURE(name);
        auto t = tube_from_json(read_json_file(data(name)));
        auto once = dump_json(tube_to_json(t));
        auto twice = dump_json(tube_to_json(tube_from_json(Json::parse(once))));
        CHECK(once == twice);
    }
    auto disks = tube_from_json(read_json_file(data("disks.json")));
    REQUIRE(disks.places.count(Place::finite(2)));
    auto *d = std::get_if<PadicDisk>(&disks.places.at(Place::finite(2)));
    REQUIRE(d);
    CHECK(d->log_radius == 1);
    auto flat = tube_from_json(Json::parse(R"({"places": [{"place": 2, "shape": "disk", "center": "0", "log_radius": "1"}]})"));
    CHECK(dump_json(tube_to_json(flat)) == dump_json(tube_to_json(disks)));
    CHECK(code_of([] {
              tube_from_json(Json::parse(R"({"places": [{"prime": 2, "shape": {"disk": {"center": "0", "radius": "3"}}}]})"));
          }) == ErrorCode::ParseError);
}

TEST_CASE("graphs and solutions") {
    auto in = equilibrium_input_from_json(read_json_file(data("chain3.json")));
    CHECK(in.graph.size() == 3);
    CHECK(in.T == std::vector<std::size_t>{1, 2});
    auto g2 = equilibrium_input_from_json(Json::parse(dump_json(graph_to_json(in.graph))));
    CHECK(g2.graph == in.graph);

    auto sol = solve_equilibrium(in.graph, in.incidence, in.T);
    auto report = to_json(sol);
    CHECK(report["flux_check"] == true);
    // the report is itself a valid graph input
    auto again = equilibrium_input_from_json(report);
    CHECK(again.graph == in.graph);
    CHECK(again.T == in.T);
    CHECK(dump_json(to_json(solve_equilibrium(again.graph, again.incidence, again.T))) == dump_json(report));
}

TEST_CASE("reports") {
    auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 200);
    auto size = to_json(size_of_graph(phi, 5));
    CHECK(size.dump() == R"({"log_size":{"prime":5,"coeff":"-1/4"},"exact":true})");
    auto e = to_json(Error(ErrorCode::NotPrime, "4 is not prime"));
    CHECK(e["error"] == "NotPrime");

    AdelicTube t;
    t.places.emplace(Place::archimedean(), ArchDisk{q(0), q(4)});
    auto geo = PowerSeriesTrunc::from_identity(SeriesIdentity::geometric(q(1)), 30);
    auto c1 = dump_json(to_json(certify({geo, t, true})));
    auto c2 = dump_json(to_json(certify({geo, t, true})));
    CHECK(c1 == c2);
    auto cj = Json::parse(c1);
    CHECK(cj["status"] == "criterion-satisfied");
    CHECK(cj["oracle"]["kind"] == "rational");

    CHECK(dump_json(Json::parse("{\"b\":1,\"a\":2}")) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
    CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}
