/**
 * Classical codes in the simplex under the d1 metric (half l1 distance):
 * exact distance certification, the scaled-simplex family, Bose-Chowla
 * Sidon sets over prime fields, and the coset-slicing construction that
 * extracts a large-minimum-distance subset from a Sidon set.
 */

#ifndef SIMPLEXCODES_L1CODES_HPP
#define SIMPLEXCODES_L1CODES_HPP

#include <optional>
#include <vector>

#include "simplexcodes/combinat.hpp"

namespace simplexcodes {

/**
 * A finite set of distinct points of S_{q,N}, stored in lexicographic order.
 * certified_distance, when present, is the exact minimum pairwise d1,
 * established by brute force.
 */
struct L1Code {
    int q = 0;
    int N = 0;
    std::vector<SimplexPoint> points;
    std::optional<int> certified_distance;

    int size() const { return static_cast<int>(points.size()); }
    /// Sorts points lexicographically and rejects duplicates / wrong totals.
    void canonicalize();
};

/// Exact minimum pairwise d1; sets code.certified_distance. Needs >= 2 points.
int min_distance(L1Code& code);

/**
 * The scaled-simplex code: with N = q = (K-1)t(t+1), the union of
 * (t+1)*S_{q,(K-1)t} and the all-ones point. Distance is certified t+1 or
 * better by brute force; size is (K-1 choose ...) bound-meeting by design.
 * Requires K, t >= 2.
 */
L1Code scaled_simplex_code(int K, int t);

/**
 * A t-Sidon set in Z_m: all t-fold sums (with repetition, nondecreasing
 * indices) are pairwise distinct mod m. Small enough here to check by force.
 */
struct SidonSet {
    long long modulus = 0;
    std::vector<long long> elements;
    int order = 0;  // t

    int size() const { return static_cast<int>(elements.size()); }
};

/// Brute-force check of the t-fold-sum property.
bool verify_sidon(const SidonSet& s);

/**
 * Bose-Chowla construction: for prime p and t >= 2, p+1 integers below
 * m = (p^{t+1}-1)/(p-1) forming a t-Sidon set in Z_m, with first elements
 * 0 and 1. GF(p^{t+1}) is realized as Z_p[x] modulo a primitive polynomial
 * found by search; discrete logs are taken from a full table, so field
 * sizes are limited to 2^24. The Sidon property is verified by brute force
 * before returning; a failure throws (it would mean a construction bug).
 */
SidonSet bose_chowla(int p, int t);

/**
 * Coset slicing: weights g_0..g_{q-1} are the first q Sidon elements; for
 * each g in Z_m the coset is { x in S_{q,N} : sum x_i g_i = g (mod m) }.
 * Returns the largest coset (ties broken toward smaller g) with its exact
 * distance certified; the cosets partition S_{q,N}, so the winner has at
 * least |S_{q,N}|/m points and distance >= t+1.
 */
L1Code coset_codes(const SidonSet& sidon, int q, int N);

/**
 * Evaluates t(1 + log2 N) + log2 K - 1 <= N exactly (as the equivalent
 * integer comparison (2N)^t * K <= 2^{N+1}). When the inequality holds and
 * the instance is small enough to enumerate, additionally confirms by
 * construction that a Sidon-based coset code in S_{N,N} reaches the size
 * needed for a K-block Tverberg partition. Returns the literal truth value
 * of the inequality.
 */
bool asymptotic_bound_check(int K, int t, int N);

}  // namespace simplexcodes

#endif
