/**
 * Exact combinatorics of the discrete simplex S_{q,N}: the set of q-tuples
 * of nonnegative integers with coordinate sum N. Points of the simplex label
 * Dicke states, constant-excitation Fock states and SU(q) spin states alike,
 * so this header is the foundation everything else builds on.
 *
 * All arithmetic is exact (GMP integers/rationals); no floating point.
 */

#ifndef SIMPLEXCODES_COMBINAT_HPP
#define SIMPLEXCODES_COMBINAT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace simplexcodes {

using Int = mpz_class;
using Rational = mpq_class;

/// Reduced rational with positive denominator (canonical form).
Rational make_rational(const Int& num, const Int& den);

/// Parses "num/den" or "num"; throws std::invalid_argument on garbage.
Rational parse_rational(std::string_view s);

/// Canonical "num/den" rendering ("num" alone when den == 1).
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

/**
 * A point of the discrete simplex: q nonnegative integers. The coordinate
 * sum is the point's total. Comparison is lexicographic on coordinates;
 * two points are equal iff their coordinate sequences are equal.
 */
struct SimplexPoint {
    std::vector<int> coords;

    SimplexPoint() = default;
    explicit SimplexPoint(std::vector<int> c);
    SimplexPoint(std::initializer_list<int> c);

    int q() const { return static_cast<int>(coords.size()); }
    int total() const;
    int operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    auto operator<=>(const SimplexPoint&) const = default;

    /// Comma-joined coordinates, e.g. "3,0,0". Used as a stable map key.
    std::string key() const;
    std::string to_string() const { return "(" + key() + ")"; }
};

/// n - e, or nullopt when some coordinate would go negative.
std::optional<SimplexPoint> point_minus(const SimplexPoint& n, const SimplexPoint& e);

/// n - e + f, or nullopt when some coordinate would go negative.
std::optional<SimplexPoint> point_shift(const SimplexPoint& n, const SimplexPoint& e,
                                        const SimplexPoint& f);

/**
 * All points of S_{q,N} in lexicographic order. This order is the canonical
 * global index: every matrix or vector over the simplex uses it.
 * |S_{q,N}| = C(N+q-1, q-1).
 */
std::vector<SimplexPoint> enumerate_simplex(int q, int N);

/// C(n, k) for arbitrary-precision n >= 0; zero when k < 0 or k > n.
Int binomial(const Int& n, int k);

/**
 * Multinomial coefficient N!/(n_0! ... n_{q-1}!) when the tuple lies in
 * S_{q,N}; zero otherwise (including any negative coordinate). The
 * out-of-simplex case is relied on throughout: shifted tuples n - e may
 * leave the simplex and must contribute nothing.
 */
Int multinomial(int N, std::span<const int> n);
Int multinomial(int N, const SimplexPoint& n);

/**
 * Composition of a q-ary word: coordinate i counts occurrences of symbol i.
 * Symbols are the digit characters '0'..'9' restricted to the alphabet
 * {0..q-1}; throws std::invalid_argument on anything else.
 */
SimplexPoint composition(std::string_view word, int q);

/**
 * The simplex metric: half the l1 distance. Always an integer on
 * constant-sum tuples. Throws std::invalid_argument on mismatched shape
 * (different q or different totals).
 */
int d1(const SimplexPoint& x, const SimplexPoint& y);

/**
 * Generalized binomial coefficient via the falling factorial:
 * top*(top-1)*...*(top-k+1)/k!. Defined for every rational top (needed
 * because tops of the form n/g need not be integers); (anything, 0) -> 1.
 */
Rational generalized_binomial(const Rational& top, int k);

/**
 * Verifies two multinomial identities exactly for the given (N, t, n):
 *   sum_{e in S_{q,t}} C(t,e) C(N-t, n-e) == C(N,n)          (convolution)
 *   prod_i C(n_i,e_i) / C(N,t) == C(t,e) C(N-t,n-e) / C(N,n) (per e)
 * Returns true iff both hold; they must, so this doubles as a self-test.
 */
bool vandermonde_identity_check(int N, int t, const SimplexPoint& n);

/**
 * Lexicographically ordered index of S_{q,N}: point list plus point->index
 * lookup by binary search.
 */
class SimplexBasis {
public:
    SimplexBasis(int q, int N);

    int q() const { return q_; }
    int total() const { return N_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<SimplexPoint>& points() const { return points_; }
    const SimplexPoint& point(int idx) const { return points_[static_cast<size_t>(idx)]; }

    /// Index of a point in lexicographic order; -1 if not in the simplex.
    int index_of(const SimplexPoint& p) const;

private:
    int q_ = 0;
    int N_ = 0;
    std::vector<SimplexPoint> points_;
};

}  // namespace simplexcodes

#endif
