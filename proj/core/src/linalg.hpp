// Internal exact rational linear algebra: reduced row echelon form, kernel
// extraction, and a phase-I simplex used as the feasibility kernel behind
// the Tverberg witness search. Not installed; implementation detail.

#ifndef SIMPLEXCODES_LINALG_HPP
#define SIMPLEXCODES_LINALG_HPP

#include <optional>
#include <vector>

#include "simplexcodes/combinat.hpp"

namespace simplexcodes::detail {

using RatMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the rank. Pivot columns come
/// out with a leading 1 and zeros elsewhere; zero rows sink to the bottom.
/// pivot_col_limit restricts pivoting to columns [0, limit) so an augmented
/// right-hand side never becomes a pivot; -1 means no limit.
int rref(RatMatrix& m, int pivot_col_limit = -1);

/**
 * First canonical kernel vector of an r x n matrix: the free column with the
 * lowest index is set to 1 and pivot variables are back-substituted, then the
 * vector is scaled so its first nonzero entry is positive. nullopt when the
 * kernel is trivial.
 */
std::optional<std::vector<Rational>> kernel_vector(RatMatrix m, int ncols);

/**
 * Exact phase-I simplex with Bland's rule: finds x >= 0 with A x = b, or
 * proves infeasibility. Redundant rows are eliminated first (RREF), so the
 * caller may pass dependent constraint systems. Deterministic: identical
 * inputs give identical basic solutions.
 */
std::optional<std::vector<Rational>> lp_feasible_point(const RatMatrix& a,
                                                       const std::vector<Rational>& b);

}  // namespace simplexcodes::detail

#endif
