/**
 * The convex-geometry engine. An l1 code B in S_{q,N} maps to a point cloud
 * in R^{|S_{q,t}|} with coordinates a_{e,h} = C(N-t, h-e) / C(N, h); a
 * K-block partition of B whose blocks admit nonnegative weights with equal
 * per-coordinate block sums (a Tverberg partition plus a common point of the
 * convex hulls) is exactly what the quantum error-correction conditions
 * reduce to. Everything here is exact rational arithmetic.
 */

#ifndef SIMPLEXCODES_TVERBERG_HPP
#define SIMPLEXCODES_TVERBERG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simplexcodes/combinat.hpp"
#include "simplexcodes/l1codes.hpp"

namespace simplexcodes {

/**
 * The cloud of points a_h indexed by the l1 codewords h (the labels), with
 * coordinates over S_{q,t} in lexicographic order. Every point satisfies
 * sum_e C(t,e) a_{e,h} = 1, so the cloud lives in an affine hyperplane of
 * dimension |S_{q,t}| - 1; the constraint is verified at construction.
 */
struct PointCloud {
    int q = 0;
    int N = 0;
    int t = 0;
    std::vector<SimplexPoint> labels;
    std::vector<SimplexPoint> error_points;         // S_{q,t}, lex order
    std::vector<std::vector<Rational>> coords;      // coords[label][error]

    int size() const { return static_cast<int>(labels.size()); }
    int dim() const { return static_cast<int>(error_points.size()); }
};

/// Builds the cloud for an l1 code; throws when t > N or the affine
/// invariant fails (which would be a bug, not an input error).
PointCloud kl_point_cloud(const L1Code& code, int t);

/**
 * A Tverberg witness: disjoint nonempty blocks of labels plus positive
 * rational weights with (a) equal per-coordinate block sums and (b) equal
 * block weight sums. Blocks need not cover all labels; zero-weight labels
 * are dropped.
 */
struct TverbergWitness {
    std::vector<std::vector<SimplexPoint>> blocks;
    std::map<SimplexPoint, Rational> weights;

    int block_count() const { return static_cast<int>(blocks.size()); }
    Rational block_weight_sum(int block) const;
    /// Exact check of both witness invariants against a cloud.
    bool verify(const PointCloud& cloud) const;
    /// Scales weights so every block's weight sum is 1.
    void normalize();
};

/// Index sets into cloud.labels, one per block.
using Partition = std::vector<std::vector<int>>;

enum class WitnessStrategy { Auto, Orbit, Exhaustive, Hinted };

enum class WitnessFailure { SearchExhausted, HintRequired };

class NoWitnessError : public std::runtime_error {
public:
    NoWitnessError(WitnessFailure k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
    WitnessFailure kind;
};

/**
 * Exact feasibility kernel: nonnegative weights with equal per-coordinate
 * block sums, normalized so block 0 sums to 1 (all blocks then sum to 1 by
 * the affine constraint). Phase-I simplex over the rationals with Bland's
 * rule; deterministic. nullopt when the partition admits no such weights.
 */
std::optional<std::map<SimplexPoint, Rational>> lp_feasible(const PointCloud& cloud,
                                                            const Partition& partition);

/**
 * Deterministic witness search. Strategies:
 *  - Orbit: group labels by composition class (sorted coordinate multiset)
 *    and try partitions whose blocks are unions of whole orbits, in
 *    canonical restricted-growth order, with orbit-constant weights. For
 *    orbit-union partitions the constraint system is invariant under
 *    coordinate permutations, so averaging any feasible weight vector over
 *    that symmetry gives an orbit-constant one: restricting the search to
 *    orbit-constant weights loses nothing and produces the symmetric
 *    solutions directly.
 *  - Exhaustive: all canonical set partitions into K blocks; only for
 *    clouds of at most 12 labels.
 *  - Hinted: exactly the supplied partition.
 *  - Auto: Orbit, then Exhaustive when small enough, else a hint is needed.
 * The result is the first feasible partition in canonical order, with every
 * block's weight sum normalized to 1. Throws NoWitnessError on failure,
 * distinguishing an exhausted search space from a strategy that gave up.
 */
TverbergWitness find_witness(const PointCloud& cloud, int K,
                             WitnessStrategy strategy = WitnessStrategy::Auto,
                             const std::optional<Partition>& hint = std::nullopt);

/**
 * Radon route for K = 2: a nonzero kernel vector y of the system
 * [coords; all-ones] . y = 0 splits labels by sign into two blocks with
 * weights |y_h|. The kernel vector is canonical (first free column,
 * first nonzero entry positive); weights are not normalized. Throws
 * NoWitnessError when the kernel is trivial.
 */
TverbergWitness radon_witness_k2(const PointCloud& cloud);

/// Labels grouped by composition class, in order of first appearance.
std::vector<std::vector<int>> composition_orbits(const std::vector<SimplexPoint>& labels);

}  // namespace simplexcodes

#endif
