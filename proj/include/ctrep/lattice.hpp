#pragma once

#include <cstddef>
#include <vector>

#include "ctrep/rational.hpp"

namespace ctrep {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;

/// Row Hermite normal form of an integer matrix: the non-zero rows of the
/// echelon basis of the row lattice, pivots positive, entries above each
/// pivot reduced into [0, pivot). All rows must have equal length.
IntMatrix hermite_rows(IntMatrix rows);

/// Least common multiple of the denominators of `values` (1 when empty).
Integer common_denominator(const RatVector& values);

/// Solution of Σ_i k_i columns[i] = rhs over Q.
struct RationalSolution {
    bool consistent = false;
    /// The columns are linearly independent.
    bool unique = false;
    /// One solution, free variables set to zero; empty when inconsistent.
    RatVector coefficients;
};

RationalSolution solve_rational(const std::vector<RatVector>& columns, const RatVector& rhs);

/// Rank over Q of the given rows.
std::size_t rational_rank(const std::vector<RatVector>& rows);

} // namespace ctrep
