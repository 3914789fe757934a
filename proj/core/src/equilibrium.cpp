// SPDX-License-Identifier: Apache-2.0
#include "adelic/equilibrium.hpp"

#include <algorithm>
#include <numeric>

#include "adelic/error.hpp"

namespace adelic {

namespace {

std::size_t bit_size(const Rational &q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::vector<std::size_t> normalized(std::vector<std::size_t> T, std::size_t n) {
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    if (!T.empty() && T.back() >= n)
        throw Error(ErrorCode::InvalidArgument, "T contains an index outside the graph");
    return T;
}

} // namespace

std::vector<std::vector<std::size_t>> IntersectionGraph::connected_components() const {
    std::size_t n = size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (Q[i][j] != 0)
                parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> out;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
}

Rational HorizontalIncidence::degree(const IntersectionGraph &g) const {
    Rational total = 0;
    for (std::size_t s = 0; s < d.size(); ++s)
        total += Rational(g.multiplicities[s]) * d[s];
    return total;
}

ValidationReport validate_graph(const IntersectionGraph &g, const std::vector<std::size_t> &T_in) {
    std::size_t n = g.size();
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "graph has no components");
    if (g.multiplicities.size() != n || g.Q.size() != n)
        throw Error(ErrorCode::InvalidArgument, "multiplicities / matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (g.Q[i].size() != n)
            throw Error(ErrorCode::InvalidArgument, "intersection matrix is not square");
        if (g.multiplicities[i] <= 0)
            throw Error(ErrorCode::InvalidArgument, "multiplicity of " + g.names[i] + " is not positive");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (g.Q[i][j] != g.Q[j][i])
                throw Error(ErrorCode::InvalidArgument, "intersection matrix is not symmetric");
            if (i != j && g.Q[i][j] < 0)
                throw Error(ErrorCode::InvalidArgument,
                            "negative intersection between " + g.names[i] + " and " + g.names[j]);
        }
    for (std::size_t i = 0; i < n; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j)
            row += g.Q[i][j] * g.multiplicities[j];
        if (row != 0)
            throw Error(ErrorCode::KernelViolation, "(F, " + g.names[i] + ") = " + to_string(row) + " != 0");
    }

    std::vector<std::size_t> T = normalized(T_in, n);
    ValidationReport report;
    report.components = g.connected_components();
    for (const auto &comp : report.components) {
        bool missing = std::any_of(comp.begin(), comp.end(),
                                   [&](std::size_t s) { return !std::binary_search(T.begin(), T.end(), s); });
        if (!missing)
            throw Error(ErrorCode::TCoversComponent,
                        "T contains every component of the connected piece containing " + g.names[comp.front()]);
    }

    // Symmetric elimination without row exchanges: the pivots are ratios of
    // leading principal minors, so all negative <=> negative definite.
    std::size_t k = T.size();
    std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            A[i][j] = g.Q[T[i]][T[j]];
    for (std::size_t c = 0; c < k; ++c) {
        if (A[c][c] >= 0)
            throw Error(ErrorCode::NotNegativeDefinite,
                        "pivot " + std::to_string(c) + " of Q|_T is " + to_string(A[c][c]) + " (>= 0)");
        report.pivots.push_back(A[c][c]);
        for (std::size_t r = c + 1; r < k; ++r) {
            if (A[r][c] == 0)
                continue;
            Rational f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < k; ++j)
                A[r][j] -= f * A[c][j];
        }
    }
    return report;
}

std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    std::size_t n = A.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (A[r][c] != 0 && (piv == n || bit_size(A[r][c]) < bit_size(A[piv][c])))
                piv = r;
        if (piv == n)
            throw Error(ErrorCode::SingularSystem, "singular system at column " + std::to_string(c));
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0)
                continue;
            Rational f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j)
                A[r][j] -= f * A[c][j];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / A[i][i];
    return x;
}

bool EquilibriumSolution::in_T(std::size_t s) const { return std::binary_search(T.begin(), T.end(), s); }

Rational EquilibriumSolution::flux_total() const {
    Rational total = 0;
    for (std::size_t s = 0; s < graph.size(); ++s)
        if (!in_T(s))
            total += flux[s] * graph.multiplicities[s];
    return total;
}

Rational EquilibriumSolution::t_pairing_total() const {
    Rational total = 0;
    for (std::size_t t : T)
        total += incidence.d[t] * graph.multiplicities[t];
    return total;
}

bool EquilibriumSolution::support_in_T() const {
    for (std::size_t s = 0; s < graph.size(); ++s)
        if (!in_T(s) && incidence.d[s] != 0)
            return false;
    return true;
}

EquilibriumSolution solve_equilibrium(const IntersectionGraph &g, const HorizontalIncidence &incidence,
                                      const std::vector<std::size_t> &T_in) {
    validate_graph(g, T_in);
    if (incidence.d.size() != g.size())
        throw Error(ErrorCode::InvalidArgument, "incidence length differs from the number of components");
    EquilibriumSolution sol;
    sol.graph = g;
    sol.T = normalized(T_in, g.size());
    sol.incidence = incidence;

    std::size_t k = sol.T.size();
    std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            A[i][j] = g.Q[sol.T[i]][sol.T[j]];
        rhs[i] = -incidence.d[sol.T[i]];
    }
    std::vector<Rational> x = solve_linear_system(std::move(A), std::move(rhs));

    sol.c.assign(g.size(), Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        sol.c[sol.T[i]] = x[i];
    sol.flux.assign(g.size(), Rational(0));
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (sol.in_T(s))
            continue;
        for (std::size_t t : sol.T)
            sol.flux[s] += sol.c[t] * g.Q[s][t];
    }
    return sol;
}

EquilibriumSolution superpose(const EquilibriumSolution &a, const EquilibriumSolution &b) {
    if (!(a.graph == b.graph) || a.T != b.T)
        throw Error(ErrorCode::MismatchedGraphs, "superposition needs the same graph and the same T");
    EquilibriumSolution out = a;
    for (std::size_t s = 0; s < a.graph.size(); ++s) {
        out.incidence.d[s] += b.incidence.d[s];
        out.c[s] += b.c[s];
        out.flux[s] += b.flux[s];
    }
    return out;
}

} // namespace adelic
