// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adelic/rational.hpp"

namespace adelic {

/// Components of a special fibre with multiplicities and a symmetric
/// intersection matrix.
struct IntersectionGraph {
    std::vector<std::string> names;
    std::vector<Integer> multiplicities;
    std::vector<std::vector<Rational>> Q;

    std::size_t size() const noexcept { return names.size(); }
    /// Connected components of the graph whose edges are the nonzero
    /// off-diagonal entries of Q; each list sorted, lists ordered by first index.
    std::vector<std::vector<std::size_t>> connected_components() const;

    friend bool operator==(const IntersectionGraph &, const IntersectionGraph &) = default;
};

/// d_s = (D_0, s) for every component.
struct HorizontalIncidence {
    std::vector<Rational> d;
    /// sum_s m_s d_s
    Rational degree(const IntersectionGraph &g) const;
};

struct ValidationReport {
    std::vector<std::vector<std::size_t>> components;
    /// Pivots of Q restricted to T (symmetric elimination in T order); all < 0.
    std::vector<Rational> pivots;
};

/// Throws InvalidArgument (shape, symmetry, off-diagonal sign, m > 0),
/// KernelViolation, TCoversComponent, NotNegativeDefinite.
ValidationReport validate_graph(const IntersectionGraph &g, const std::vector<std::size_t> &T);

struct EquilibriumSolution {
    IntersectionGraph graph;
    std::vector<std::size_t> T; // sorted
    HorizontalIncidence incidence;
    std::vector<Rational> c;    // length |S|, zero off T
    std::vector<Rational> flux; // length |S|, a_s = (V, s) off T, zero on T

    Rational flux_total() const;      // sum_{s not in T} a_s m_s
    Rational t_pairing_total() const; // sum_{t in T} m_t d_t
    Rational degree() const { return incidence.degree(graph); }
    /// d vanishes off T (the divisor does not meet the affinoid).
    bool support_in_T() const;
    bool in_T(std::size_t s) const;
};

/// Solves (Q|_T) c = -d|_T exactly.
EquilibriumSolution solve_equilibrium(const IntersectionGraph &g, const HorizontalIncidence &incidence,
                                      const std::vector<std::size_t> &T);

/// Coefficientwise sum; throws MismatchedGraphs unless graph and T agree.
EquilibriumSolution superpose(const EquilibriumSolution &a, const EquilibriumSolution &b);

/// Exact solve of A x = b by Gaussian elimination, choosing the pivot of
/// smallest bit size in each column. Throws SingularSystem.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

} // namespace adelic
