/**
 * Exact "sum of radicals" arithmetic. Quantities of the form
 *
 *     sum_k c_k * sqrt(k),   c_k rational, k squarefree positive integer,
 *
 * are zero iff every coefficient is zero, because square roots of distinct
 * squarefree integers are linearly independent over Q. Keeping every term
 * in the canonical (squarefree kernel, rational coefficient) form therefore
 * makes zero-testing of the error-correction sums decidable and exact.
 */

#ifndef SIMPLEXCODES_RADICAL_HPP
#define SIMPLEXCODES_RADICAL_HPP

#include <map>
#include <string>

#include "simplexcodes/combinat.hpp"

namespace simplexcodes {

/// n = square_part^2 * squarefree_part; returns squarefree_part, n >= 1.
Int squarefree_decompose(const Int& n, Int& square_part);

/**
 * A signed square root of a nonnegative rational: sign * sqrt(radicand),
 * with sign in {-1, 0, +1} and sign == 0 iff radicand == 0. Closed under
 * multiplication; this is the exact amplitude type of every code built here.
 */
struct SqrtRational {
    int sign = 0;
    Rational radicand = Rational(0);

    SqrtRational() = default;
    SqrtRational(int s, Rational rad);

    /// +sqrt(r); r must be >= 0.
    static SqrtRational sqrt_of(const Rational& r);
    /// The rational r itself, i.e. sign(r) * sqrt(r^2).
    static SqrtRational of_rational(const Rational& r);

    bool is_zero() const { return sign == 0; }
    /// The represented value's square, with the sign discarded.
    Rational square() const { return radicand; }
    double to_double() const;

    SqrtRational operator*(const SqrtRational& other) const;
    SqrtRational operator-() const;
    bool operator==(const SqrtRational&) const = default;

    std::string to_string() const;
};

/**
 * Exact sum of signed square roots of rationals, stored canonically as
 * {squarefree kernel -> nonzero rational coefficient}. The canonical form of
 * sqrt(a/b) has kernel squarefree(a*b): sqrt(a/b) = sqrt(a*b)/b, and the
 * square part of a*b is pulled into the coefficient.
 */
class RadicalSum {
public:
    RadicalSum() = default;

    void add(const SqrtRational& term);
    RadicalSum& operator+=(const RadicalSum& other);
    RadicalSum& operator-=(const RadicalSum& other);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Int, Rational>& terms() const { return terms_; }

    /// Floating-point estimate of the value (reporting only, never decisions).
    double estimate() const;

    std::string to_string() const;

private:
    std::map<Int, Rational> terms_;
};

}  // namespace simplexcodes

#endif
