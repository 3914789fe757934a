// SPDX-License-Identifier: Apache-2.0
// adelic: command-line front end. One subcommand per module; reports are
// JSON (default) or flattened "key: value" text.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adelic/json_io.hpp"

namespace {

using adelic::Json;

enum Exit { kOk = 0, kUsage = 2, kDomain = 3, kInconsistent = 4, kTruncation = 5 };

struct Common {
    std::string format = "json";
    std::string out;
};

void flatten(const Json &j, const std::string &prefix, std::ostream &os) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Common &c, const Json &report) {
    std::string text;
    if (c.format == "text") {
        std::ostringstream os;
        flatten(report, "", os);
        text = os.str();
    } else {
        text = adelic::dump_json(report);
    }
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw adelic::Error(adelic::ErrorCode::ParseError, "cannot write " + c.out);
    f << text;
}

adelic::Place place_option(const std::optional<std::uint64_t> &prime) {
    return prime ? adelic::Place::finite(*prime) : adelic::Place::archimedean();
}

std::uint64_t need_prime(const std::optional<std::uint64_t> &prime, const char *cmd) {
    if (!prime)
        throw CLI::ValidationError(std::string(cmd) + ": --prime is required");
    return *prime;
}

} // namespace

int main(int argc, char **argv) {
    using namespace adelic;
    CLI::App app{"Exact p-adic, capacity and rationality computations for formal power series"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", common.out, "Write the report to this file");

    std::string series_path, tube_path, graph_path, rule_path, enlarged_path, set_path;
    std::optional<std::uint64_t> prime;
    std::uint64_t prime_bound = 100000;
    std::string value = "0", log_r = "0", threshold = "0", mode;
    std::vector<std::size_t> Ds{1, 2, 3};
    std::size_t i_max = 12, k_max = 8, samples = 0;
    bool meromorphic = false, compare = false;

    auto add_series = [&](CLI::App *sub) {
        return sub->add_option("--series", series_path, "Series JSON file")->required()->check(CLI::ExistingFile);
    };
    auto add_prime = [&](CLI::App *sub) { return sub->add_option("--prime", prime, "Prime p"); };

    std::function<Json()> run;

    auto *valuation = app.add_subcommand("valuation", "p-adic valuation of a rational");
    valuation->add_option("--value", value, "Rational a/b")->required();
    add_prime(valuation)->required();
    valuation->callback([&] {
        run = [&] {
            Rational q = parse_rational(value);
            Valuation v = padic_valuation(q, *prime);
            Json j;
            j["value"] = rational_to_json(q);
            j["prime"] = *prime;
            j["valuation"] = v.is_infinite() ? Json("+inf") : Json(v.value());
            return j;
        };
    });

    auto *gauss = app.add_subcommand("gauss-norm", "Gauss norm on the disk of radius p^log_r");
    add_series(gauss);
    add_prime(gauss)->required();
    gauss->add_option("--log-r", log_r, "log r in valuation units (rational)");
    gauss->callback([&] {
        run = [&] { return to_json(gauss_log_norm(series_from_json(read_json_file(series_path)), *prime, parse_rational(log_r))); };
    });

    auto *np = app.add_subcommand("newton-polygon", "Newton polygon at p");
    add_series(np);
    add_prime(np)->required();
    np->callback([&] {
        run = [&] { return to_json(newton_polygon(series_from_json(read_json_file(series_path)), *prime)); };
    });

    auto *size = app.add_subcommand("size", "Size of the graph of phi at p");
    add_series(size);
    add_prime(size)->required();
    size->callback([&] {
        run = [&] { return to_json(size_of_graph(series_from_json(read_json_file(series_path)), *prime)); };
    });

    auto *radius = app.add_subcommand("radius", "Radius of convergence (archimedean without --prime)");
    add_series(radius);
    add_prime(radius);
    radius->add_flag("--compare", compare, "Also compare with the size at p");
    radius->callback([&] {
        run = [&] {
            auto phi = series_from_json(read_json_file(series_path));
            if (compare)
                return to_json(check_size_radius_inequality(phi, need_prime(prime, "radius --compare")));
            return to_json(log_radius_of_convergence(phi, place_option(prime)));
        };
    });

    auto *budget = app.add_subcommand("budget", "A-analyticity / Bombieri sums over primes");
    budget->add_option("--rule", rule_path, "Rule JSON file")->check(CLI::ExistingFile);
    budget->add_option("--series", series_path, "Derive the rule from a series")->check(CLI::ExistingFile);
    budget->add_option("--prime-bound", prime_bound, "Largest prime summed")->check(CLI::Range(2ULL, 100000000ULL));
    budget->add_option("--mode", mode, "size or bombieri")->check(CLI::IsMember({"size", "bombieri"}));
    budget->callback([&] {
        if (rule_path.empty() == series_path.empty())
            throw CLI::ValidationError("budget: give exactly one of --rule, --series");
        run = [&] {
            bool bombieri = mode == "bombieri";
            Json spec;
            if (!rule_path.empty()) {
                spec = read_json_file(rule_path);
                if (mode.empty())
                    bombieri = spec.value("kind", std::string("size")) == "radius";
            } else {
                spec = Json{{"form", "derived"}, {"series", read_json_file(series_path)}};
            }
            return bombieri ? to_json(bombieri_report(radius_rule_from_json(spec), prime_bound))
                            : to_json(a_analyticity_report(size_rule_from_json(spec), prime_bound));
        };
    });

    auto *equilibrium = app.add_subcommand("equilibrium", "Equilibrium divisor on an intersection graph");
    equilibrium->add_option("--graph", graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
    equilibrium->callback([&] {
        run = [&] {
            auto in = equilibrium_input_from_json(read_json_file(graph_path));
            return to_json(solve_equilibrium(in.graph, in.incidence, in.T));
        };
    });

    auto *capacity = app.add_subcommand("capacity", "Capacitary log-norms of a tube, or the capacity of a compact set");
    capacity->add_option("--tube", tube_path, "Tube JSON file")->check(CLI::ExistingFile);
    capacity->add_option("--set", set_path, "Compact archimedean set JSON file")->check(CLI::ExistingFile);
    capacity->add_option("--enlarged", enlarged_path, "Larger tube for the monotonicity check")->check(CLI::ExistingFile);
    capacity->add_option("--samples", samples, "Fekete points for polylines (16, 32 or 64)");
    add_prime(capacity);
    capacity->callback([&] {
        if (tube_path.empty() == set_path.empty())
            throw CLI::ValidationError("capacity: give exactly one of --tube, --set");
        run = [&] {
            if (!set_path.empty()) {
                Json s = read_json_file(set_path);
                std::string kind = s.at("shape").get<std::string>();
                CompactShape shape;
                if (kind == "disk")
                    shape = CompactDisk{Complex(s.value("re", 0.0), s.value("im", 0.0)), s.at("radius").get<double>()};
                else if (kind == "interval")
                    shape = CompactInterval{s.at("a").get<double>(), s.at("b").get<double>()};
                else if (kind == "polyline") {
                    CompactCurve c;
                    for (const auto &v : s.at("vertices"))
                        c.vertices.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
                    shape = c;
                } else
                    throw Error(ErrorCode::ParseError, "set shape must be disk, interval or polyline");
                return to_json(archimedean_capacity(shape, samples ? samples : 64));
            }
            AdelicTube tube = tube_from_json(read_json_file(tube_path));
            if (!enlarged_path.empty())
                return to_json(monotonicity_check(tube, tube_from_json(read_json_file(enlarged_path))));
            Json j;
            j["base"] = rational_to_json(tube.base);
            Json norms = Json::array();
            if (prime)
                norms.push_back(to_json(place_log_norm(tube.domain_at(Place::finite(*prime)), tube.base)));
            else
                for (const auto &[place, shape] : tube.places)
                    norms.push_back(to_json(place_log_norm(tube.domain_at(place), tube.base)));
            j["norms"] = norms;
            return j;
        };
    });

    auto *degree = app.add_subcommand("degree", "Arakelov degree of the tangent line with capacitary norms");
    degree->add_option("--tube", tube_path, "Tube JSON file")->required()->check(CLI::ExistingFile);
    degree->callback([&] {
        run = [&] {
            AdelicTube tube = tube_from_json(read_json_file(tube_path));
            Json j = to_json(arakelov_degree(tube));
            j["tube"] = tube_to_json(tube);
            return j;
        };
    });

    auto *filtration = app.add_subcommand("filtration", "Vanishing filtration, jet norms and rho");
    add_series(filtration);
    filtration->add_option("--D", Ds, "Degrees D (one or more)")->expected(1, -1);
    filtration->add_option("--imax", i_max, "Largest jet order");
    filtration->add_option("--mode", mode, "ranks, padic or arch")->check(CLI::IsMember({"ranks", "padic", "arch"}));
    filtration->add_option("--threshold", threshold, "Window threshold on i/D for rho (rational)");
    filtration->add_option("--samples", samples, "Torus grid points per circle (arch mode)");
    add_prime(filtration);
    filtration->callback([&] {
        for (std::size_t D : Ds)
            if (D == 0)
                throw CLI::ValidationError("filtration: --D values must be positive");
        run = [&] {
            auto phi = series_from_json(read_json_file(series_path));
            Json j;
            if (mode.empty() || mode == "ranks") {
                Json tables = Json::array();
                for (const auto &t : vanishing_filtrations(phi, Ds, i_max))
                    tables.push_back(to_json(t));
                j["tables"] = tables;
            } else if (mode == "padic") {
                std::uint64_t p = need_prime(prime, "filtration --mode padic");
                JetNormTable t = jet_norm_table_padic(phi, Ds, i_max, p);
                j["jet_norms"] = to_json(t);
                j["rho"] = to_json(rho_and_canonical({t}, Place::finite(p), parse_rational(threshold)));
            } else {
                Json e = Json::array();
                for (std::size_t D : Ds)
                    for (std::size_t i = 0; i <= i_max; ++i) {
                        ArchJetEstimate a = jet_norm_arch_estimate(phi, D, i, samples);
                        e.push_back(Json{{"D", D}, {"i", i}, {"lo", a.lo}, {"hi", a.hi}, {"radius", a.radius},
                                         {"majorant", a.majorant}, {"samples", a.samples}});
                    }
                j["arch_estimates"] = e;
            }
            return j;
        };
    });

    auto *certify_cmd = app.add_subcommand("certify", "Rationality certificate from the adelic degree criterion");
    add_series(certify_cmd);
    certify_cmd->add_option("--tube", tube_path, "Tube JSON file")->check(CLI::ExistingFile);
    auto *kmax_opt = certify_cmd->add_option("--kmax", k_max, "Hankel oracle bidegree bound (needs N >= 2 kmax + 2)");
    certify_cmd->add_flag("--meromorphic", meromorphic, "Assert meromorphic continuation to the declared domains");
    std::optional<CertificateStatus> cert_status;
    certify_cmd->callback([&] {
        run = [&] {
            SeriesCase sc{series_from_json(read_json_file(series_path)), {}, meromorphic, k_max};
            // the default bound shrinks to fit short truncations; an explicit one does not
            if (kmax_opt->count() == 0) {
                std::size_t N = sc.phi.truncation();
                sc.k_max = std::min(k_max, N >= 2 ? (N - 2) / 2 : 0);
            }
            if (!tube_path.empty()) {
                Json t = read_json_file(tube_path);
                sc.tube = tube_from_json(t);
                if (t.value("meromorphic", false))
                    sc.meromorphy_asserted = true;
            }
            Certificate c = certify(sc);
            cert_status = c.status;
            return to_json(c);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        emit(common, run());
    } catch (const Error &e) {
        std::cerr << "adelic: " << e.name() << ": " << e.what() << "\n";
        try {
            emit(common, to_json(e));
        } catch (const Error &) {
        }
        if (e.code() == ErrorCode::ParseError)
            return kUsage;
        return e.code() == ErrorCode::TruncationTooShort ? kTruncation : kDomain;
    } catch (const Json::exception &e) {
        std::cerr << "adelic: malformed input: " << e.what() << "\n";
        return kUsage;
    }
    if (cert_status == CertificateStatus::InconsistentDeclaration)
        return kInconsistent;
    return kOk;
}
