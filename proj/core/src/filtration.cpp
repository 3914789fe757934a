// SPDX-License-Identifier: Apache-2.0
#include "adelic/filtration.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "adelic/error.hpp"
#include "parallel.hpp"

namespace adelic {

namespace {

// A section as monomial coefficients together with its jets.
struct Column {
    std::vector<Rational> coeffs;
    std::vector<Rational> jets;
};

std::vector<Column> initial_columns(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max) {
    auto jets = jet_matrix(phi, D, i_max);
    std::size_t n = jets.size();
    std::vector<Column> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        cols[j].coeffs.assign(n, Rational(0));
        cols[j].coeffs[j] = 1;
        cols[j].jets = std::move(jets[j]);
    }
    return cols;
}

std::size_t bit_size(const Rational &q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Clears row k from every column but `pivot`, then drops the pivot column.
void eliminate(std::vector<Column> &cols, std::size_t pivot, std::size_t k) {
    const Column piv = cols[pivot];
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j == pivot || cols[j].jets[k] == 0)
            continue;
        Rational f = cols[j].jets[k] / piv.jets[k];
        for (std::size_t r = k; r < piv.jets.size(); ++r)
            if (piv.jets[r] != 0)
                cols[j].jets[r] -= f * piv.jets[r];
        for (std::size_t r = 0; r < piv.coeffs.size(); ++r)
            if (piv.coeffs[r] != 0)
                cols[j].coeffs[r] -= f * piv.coeffs[r];
    }
    cols.erase(cols.begin() + static_cast<long>(pivot));
}

void check_graph(const PowerSeriesTrunc &phi, std::size_t i_max) {
    if (phi[0] != 0)
        throw Error(ErrorCode::NotPointed, "phi(0) != 0");
    if (phi.truncation() < i_max + 1)
        throw Error(ErrorCode::TruncationTooShort, "truncation " + std::to_string(phi.truncation()) +
                                                       " < i_max + 1 = " + std::to_string(i_max + 1));
}

// Basis of E^i over Q (columns after clearing rows 0..i-1).
std::vector<Column> rational_basis(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i, std::size_t i_max) {
    auto cols = initial_columns(phi, D, i_max);
    for (std::size_t k = 0; k < i; ++k) {
        std::size_t pivot = cols.size();
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (cols[j].jets[k] != 0 && (pivot == cols.size() || bit_size(cols[j].jets[k]) < bit_size(cols[pivot].jets[k])))
                pivot = j;
        if (pivot < cols.size())
            eliminate(cols, pivot, k);
    }
    return cols;
}

} // namespace

std::vector<std::vector<Rational>> jet_matrix(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max) {
    check_graph(phi, i_max);
    std::size_t len = i_max + 1;
    // powers[b] = phi^b truncated at t^{i_max}
    std::vector<std::vector<Rational>> powers(D + 1, std::vector<Rational>(len, Rational(0)));
    powers[0][0] = 1;
    for (std::size_t b = 1; b <= D; ++b)
        for (std::size_t u = 0; u < len; ++u) {
            if (powers[b - 1][u] == 0)
                continue;
            for (std::size_t v = 1; u + v < len; ++v)
                if (phi[v] != 0)
                    powers[b][u + v] += powers[b - 1][u] * phi[v];
        }
    std::vector<std::vector<Rational>> jets((D + 1) * (D + 1), std::vector<Rational>(len, Rational(0)));
    for (std::size_t a = 0; a <= D; ++a)
        for (std::size_t b = 0; b <= D; ++b)
            for (std::size_t k = a; k < len; ++k)
                jets[a * (D + 1) + b][k] = powers[b][k - a];
    return jets;
}

FiltrationTable vanishing_filtration(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max) {
    if (D == 0)
        throw Error(ErrorCode::InvalidArgument, "D must be >= 1");
    auto cols = initial_columns(phi, D, i_max);
    FiltrationTable t;
    t.D = D;
    t.i_max = i_max;
    for (std::size_t k = 0; k <= i_max; ++k) {
        std::size_t pivot = cols.size();
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (cols[j].jets[k] != 0 && (pivot == cols.size() || bit_size(cols[j].jets[k]) < bit_size(cols[pivot].jets[k])))
                pivot = j;
        t.ranks.push_back(pivot < cols.size() ? 1u : 0u);
        if (pivot < cols.size())
            eliminate(cols, pivot, k);
    }
    t.limit_dimension = cols.size();
    for (auto &c : cols)
        t.limit_basis.push_back(std::move(c.coeffs));
    if (t.limit_dimension > 0 && t.ranks.back() == 0) {
        std::size_t i = i_max;
        while (i > 0 && t.ranks[i - 1] == 0)
            --i;
        t.stationary_index = i;
    }
    return t;
}

std::vector<FiltrationTable> vanishing_filtrations(const PowerSeriesTrunc &phi, const std::vector<std::size_t> &Ds,
                                                   std::size_t i_max) {
    std::vector<FiltrationTable> out(Ds.size());
    detail::parallel_for(Ds.size(), [&](std::size_t k) { out[k] = vanishing_filtration(phi, Ds[k], i_max); });
    return out;
}

Rational algebraicity_ratio(const FiltrationTable &table) {
    Rational num = 0, den = 0;
    for (std::size_t i = 0; i < table.ranks.size(); ++i) {
        num += static_cast<unsigned long>(i * table.ranks[i]);
        den += table.ranks[i];
    }
    if (den == 0)
        throw Error(ErrorCode::EmptyTable, "no nonzero ranks in the filtration table");
    if (table.D == 0)
        throw Error(ErrorCode::InvalidArgument, "D must be positive");
    return num / (den * static_cast<unsigned long>(table.D));
}

std::vector<JetNormEntry> jet_norms_padic(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i_max,
                                          std::uint64_t p) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (D == 0)
        throw Error(ErrorCode::InvalidArgument, "D must be >= 1");
    auto cols = initial_columns(phi, D, i_max);
    std::vector<JetNormEntry> out;
    for (std::size_t k = 0; k <= i_max; ++k) {
        // The remaining columns are a Z_(p)-basis of the saturated lattice
        // E^k cap Z_(p)^n, so the norm is attained on one of them.
        std::size_t pivot = cols.size();
        std::int64_t best = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].jets[k] == 0)
                continue;
            std::int64_t v = valuation_nonzero(cols[j].jets[k], p);
            if (pivot == cols.size() || v < best) {
                pivot = j;
                best = v;
            }
        }
        JetNormEntry e;
        e.D = D;
        e.i = k;
        if (pivot == cols.size()) {
            e.log_norm = LogValue::minus_infinity(p);
        } else {
            e.log_norm = LogValue::at_prime(p, Rational(-best));
            e.witness = cols[pivot].coeffs;
            eliminate(cols, pivot, k);
        }
        out.push_back(std::move(e));
    }
    return out;
}

JetNormEntry jet_operator_norm_padic(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i, std::uint64_t p) {
    return jet_norms_padic(phi, D, i, p).back();
}

JetNormTable jet_norm_table_padic(const PowerSeriesTrunc &phi, const std::vector<std::size_t> &Ds, std::size_t i_max,
                                  std::uint64_t p) {
    JetNormTable table;
    table.place = Place::finite(p);
    for (std::size_t k = 0; k <= i_max && k <= phi.truncation(); ++k)
        if (phi[k] != 0 && valuation_nonzero(phi[k], p) < 0)
            table.integral_coefficients = false;
    std::vector<std::vector<JetNormEntry>> parts(Ds.size());
    detail::parallel_for(Ds.size(), [&](std::size_t k) { parts[k] = jet_norms_padic(phi, Ds[k], i_max, p); });
    for (auto &part : parts)
        for (auto &e : part)
            table.entries.push_back(std::move(e));
    return table;
}

ArchJetEstimate jet_norm_arch_estimate(const PowerSeriesTrunc &phi, std::size_t D, std::size_t i, std::size_t samples,
                                       std::optional<double> r) {
    if (D == 0)
        throw Error(ErrorCode::InvalidArgument, "D must be >= 1");
    std::optional<LogValue> rho;
    if (phi.has_rule())
        rho = phi.identity()->log_radius(Place::archimedean());
    if (!rho || rho->is_minus_infinity())
        throw Error(ErrorCode::UnknownConvergenceRadius, "no archimedean radius known for this series");
    double radius = rho->is_plus_infinity() ? INFINITY : std::exp(rho->to_double());
    double rr = r ? *r : std::min(0.5, radius / 2.0);
    if (!(rr > 0) || !(rr < radius))
        throw Error(ErrorCode::InvalidArgument, "Cauchy radius must satisfy 0 < r < radius of convergence");
    auto M = phi.identity()->arch_majorant(rr);
    if (!M)
        throw Error(ErrorCode::UnknownConvergenceRadius, "no majorant for the series on |t| <= r");

    ArchJetEstimate est;
    est.radius = rr;
    est.majorant = *M;
    est.hi = static_cast<double>(D) * std::log(std::max(1.0, *M)) - static_cast<double>(i) * std::log(rr);

    // grid fine enough that D * h < 1/2 for the sampled-sup certificate
    std::size_t grid = std::max<std::size_t>(samples, static_cast<std::size_t>(std::ceil(4.0 * std::numbers::pi * D)) + 1);
    est.samples = grid;
    double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
    double inflate = 1.0 / (1.0 - static_cast<double>(D) * h);

    auto cols = rational_basis(phi, D, i, i);
    std::vector<std::complex<double>> unit(grid);
    for (std::size_t k = 0; k < grid; ++k)
        unit[k] = std::polar(1.0, h * static_cast<double>(k));
    double best = -INFINITY;
    for (const auto &c : cols) {
        if (c.jets[i] == 0)
            continue;
        double sampled = 0.0;
        for (std::size_t u = 0; u < grid; ++u)
            for (std::size_t v = 0; v < grid; ++v) {
                std::complex<double> acc = 0.0, xa = 1.0;
                for (std::size_t a = 0; a <= D; ++a, xa *= unit[u]) {
                    std::complex<double> yb = 1.0;
                    for (std::size_t b = 0; b <= D; ++b, yb *= unit[v]) {
                        const Rational &q = c.coeffs[a * (D + 1) + b];
                        if (q != 0)
                            acc += q.get_d() * xa * yb;
                    }
                }
                sampled = std::max(sampled, std::abs(acc));
            }
        double bound = std::log(sampled * inflate);
        best = std::max(best, log_abs(c.jets[i]) - bound);
    }
    est.lo = best;
    if (best == -INFINITY)
        est.hi = -INFINITY;
    return est;
}

RhoResult rho_and_canonical(const std::vector<JetNormTable> &tables, const Place &place, const Rational &threshold) {
    RhoResult out;
    out.rho_window = place.is_finite() ? LogValue::minus_infinity(place.prime()) : LogValue::minus_infinity();
    for (const auto &table : tables) {
        if (table.place != place)
            continue;
        for (const auto &e : table.entries) {
            if (e.i == 0 || make_rational(static_cast<long>(e.i), static_cast<long>(e.D)) < threshold)
                continue;
            ++out.qualifying;
            if (e.log_norm.is_minus_infinity())
                continue;
            LogValue scaled = e.log_norm.scaled(Rational(1, static_cast<long>(e.i)));
            if (!out.argmax || scaled > out.rho_window) {
                out.rho_window = scaled;
                out.argmax = e;
            }
        }
    }
    if (out.qualifying == 0)
        throw Error(ErrorCode::EmptyGrid, "no grid entry with i/D >= " + to_string(threshold));
    out.canonical_log_norm = out.rho_window;
    return out;
}

bool schwarz_comparison(const LogValue &rho_window, const LogValue &log_size) {
    auto ord = rho_window <=> -log_size;
    return ord == std::partial_ordering::less || ord == std::partial_ordering::equivalent;
}

} // namespace adelic
