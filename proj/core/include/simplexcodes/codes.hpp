/**
 * The quantum-code layer. A SimplexCode assigns, for each logical basis
 * index, exact signed-square-root amplitudes to simplex points; the same
 * object serves as a qudit permutation-invariant code (Dicke basis), a
 * multi-mode constant-excitation Fock state code, or an SU(q) spin code,
 * distinguished only by a space tag. Verification of the four
 * error-correction conditions C1-C4 is exact: each sum is accumulated as a
 * RadicalSum and tested for identical zero.
 */

#ifndef SIMPLEXCODES_CODES_HPP
#define SIMPLEXCODES_CODES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexcodes/combinat.hpp"
#include "simplexcodes/radical.hpp"
#include "simplexcodes/tverberg.hpp"

namespace simplexcodes {

enum class SpaceTag { PI, Fock, Spin };

std::string to_string(SpaceTag tag);
SpaceTag space_tag_from_string(const std::string& s);

struct SimplexCode {
    int q = 0;
    int N = 0;
    int K = 0;
    SpaceTag space = SpaceTag::PI;
    /// amplitudes[i] maps a simplex point to its amplitude; absent = zero.
    std::vector<std::map<SimplexPoint, SqrtRational>> amplitudes;
    /// Set only after an exact verification (or carried by a proposition
    /// that licenses it); never a bare theorem claim.
    std::optional<int> distance;
    std::string provenance;

    const std::map<SimplexPoint, SqrtRational>& logical(int i) const {
        return amplitudes[static_cast<size_t>(i)];
    }
    /// Exact squared norm of logical basis vector i.
    Rational norm_squared(int i) const;
    /// True when no two logical vectors share a support point.
    bool disjoint_supports() const;
};

enum class KLMode { Exact, Float };

/// Identifies the first violating sum of a failed condition.
struct KLViolation {
    int i = 0;
    int j = 0;
    std::optional<SimplexPoint> e;  // absent for C1/C2 (error-independent)
    std::optional<SimplexPoint> f;
    std::string residual;           // exact RadicalSum rendering or a float
    double residual_estimate = 0.0;

    std::string to_string() const;
};

struct KLConditionReport {
    bool passed = true;
    double worst_residual = 0.0;
    std::optional<KLViolation> violation;
};

/**
 * Per-condition verdicts for C1 (orthogonality of the basis), C2 (equal
 * norms), C3 (error-word orthogonality), C4 (non-deformation), plus the
 * distance t+1 declared on a full pass. In exact mode a condition passes
 * iff every sum is identically zero; in float mode iff every |sum| is
 * within the recorded tolerance.
 */
struct KLReport {
    int t = 0;
    KLMode mode = KLMode::Exact;
    double tolerance = 0.0;
    std::array<KLConditionReport, 4> conditions;
    std::optional<int> declared_distance;

    bool passed() const;
    const KLConditionReport& condition(int number) const {  // 1-based C1..C4
        return conditions[static_cast<size_t>(number - 1)];
    }
};

/**
 * Evaluates C1-C4 for all e, f in S_{q,t} and all ordered pairs of distinct
 * logical indices. The combinatorial weight of each term is
 * C(N-t, n-e) / sqrt(C(N,n) C(N,n-e+f)); terms with n-e or n-e+f outside
 * the simplex vanish. Requires t <= N.
 */
KLReport check_kl(const SimplexCode& code, int t, KLMode mode = KLMode::Exact,
                  double tolerance = 1e-9);

/**
 * Builds the code |c_i> = sum_{h in block i} sqrt(x_h) |h> from a
 * normalized witness, then confirms it passes the exact check at the
 * cloud's t (a failure throws: it would mean a solver bug). The declared
 * distance is t+1.
 */
SimplexCode assemble_from_witness(const TverbergWitness& witness, const PointCloud& cloud,
                                  SpaceTag space);

/**
 * The two-mode family with parameters (g, m, delta, eps): total excitation
 * n = 2gm + delta + 1, ladder amplitudes gamma * b_l with
 *   b_l = sqrt( C(m,l) / C(n/g - l, m+1) ),
 *   gamma = sqrt( C(n/(2g), m) * (n - 2gm) / (g(m+1)) ),
 * where the possibly non-integer tops go through generalized_binomial.
 * Even-l points sit at (gl, n-gl) in logical 0; the roles swap in logical 1
 * with the sign eps on the swapped even terms. Unit norm is asserted.
 */
SimplexCode construction_gmde(int g, int m, int delta, int eps);

/// Largest t certified for the (g, m, delta, eps) family by its hypotheses
/// (m >= ceil(t/2), delta >= t, and g >= t for eps=-1 / g >= t+1 for
/// eps=+1); -1 when even t = 0 is not certified.
int gmde_certified_t(int g, int m, int delta, int eps);

/**
 * Relabels a code into another space. Amplitude data is bit-identical; the
 * declared distance is carried exactly when the equivalence propositions
 * license it (always from PI; from Spin only at q = 2) and cleared
 * otherwise, where it can be re-derived via check_kl.
 */
SimplexCode map_space(const SimplexCode& code, SpaceTag target);

/// Named reference codes with paper-given exact amplitudes (plus one
/// structural entry with no published amplitudes). Unknown names throw.
SimplexCode load_fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// True when the fixture stores structure only (no amplitudes to verify).
bool fixture_is_structural(const SimplexCode& code);

}  // namespace simplexcodes

#endif
