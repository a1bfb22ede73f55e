/**
 * Independent brute-force verifiers. Nothing here reuses the C1-C4
 * machinery: deletion checks expand Dicke states over all q^N strings and
 * contract qudits one position at a time, amplitude-damping checks build
 * Kraus matrices and Gram tables on Fock space, spin checks multiply
 * Jordan-Schwinger generator matrices, and covariance checks construct the
 * induced degree-N symmetric action of a q x q unitary.
 */

#ifndef SIMPLEXCODES_ORACLE_HPP
#define SIMPLEXCODES_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "simplexcodes/codes.hpp"
#include "simplexcodes/combinat.hpp"

namespace simplexcodes {

/// Dense complex state; the basis is stated by each producing function.
using DenseState = Eigen::VectorXcd;
/// Dense complex operator over a stated basis.
using OperatorMatrix = Eigen::MatrixXcd;

/**
 * Uniform expansion of the Dicke state |D_n> over all q^N strings, indexed
 * by the base-q value of the string (first qudit most significant).
 * Guarded to q^N <= 10^6; the result has unit norm within 1e-12.
 */
DenseState dicke_expand(const SimplexPoint& n);

/**
 * Applies the multiset of single-qudit deletions e to the dense expansion of
 * |D_n> one position at a time and compares against the closed form
 * sqrt(C(N-t, n-e)/C(N, n)) |D_{n-e}>; returns the max amplitude deviation.
 * reverse_order applies the same deletion types in the opposite order at
 * different positions, for order-independence checks.
 */
double deletion_oracle_check(const SimplexPoint& n, const SimplexPoint& e,
                             bool reverse_order = false);

/// Single-mode amplitude-damping Kraus operator A_x on the span of
/// |0..n_max>: entry sqrt((1-gamma)^{j-x} gamma^x C(j,x)) at (j-x, j).
OperatorMatrix ad_kraus(int n_max, int x, double gamma);

/// Gram table G^{(ij)}_{ab} = <c_i| A_a^dag A_b |c_j> for the multi-mode
/// error list {A_e : 0 <= |e| <= t} at one damping rate.
struct GramTable {
    std::vector<SimplexPoint> errors;
    int K = 0;
    /// blocks[a * errors.size() + b] is the K x K matrix over (i, j).
    std::vector<OperatorMatrix> blocks;

    const OperatorMatrix& block(size_t a, size_t b) const { return blocks[a * errors.size() + b]; }
};

GramTable build_ad_gram_table(const SimplexCode& code, int t, double gamma);

struct GramVerdict {
    bool passed = false;
    double worst_orthogonality = 0.0;  // off-diagonal (i != j) magnitude
    double worst_deformation = 0.0;    // diagonal-block spread across i
    double tolerance = 0.0;
};

/// Knill-Laflamme check on the amplitude-damping error set, straight from
/// Gram tables at each sampled damping rate. The no-loss operator (|e| = 0)
/// is part of the error set.
GramVerdict ad_kl_gram(const SimplexCode& code, int t, const std::vector<double>& gammas,
                       double tolerance = 1e-9);

struct FidelityFit {
    double fitted_leading_coefficient = 0.0;
    double expected_leading_coefficient = 0.0;  // C(N, t+1)
    /// Max spread of the infidelity across sampled input states; should be
    /// at noise level for constant-excitation codes.
    double state_dependence = 0.0;
    std::vector<double> gammas;
};

/// Worst-case fidelity over the logical basis states at one damping rate:
/// 1 minus the channel weight past t losses. Exactly 1 at gamma = 0.
double fidelity_at(const SimplexCode& code, int t, double gamma);

/**
 * Worst-case code fidelity under the error set {A_e : |e| <= t}:
 * F(gamma) = min over sampled logical states of sum_e <psi|A_e^dag A_e|psi>,
 * sampled over the K basis states plus 32 seeded random superpositions.
 * Fits 1 - F ~ A gamma^{t+1} from the sampled rates (intercept of the
 * deflated series) and reports A next to C(N, t+1).
 */
FidelityFit fidelity_series(const SimplexCode& code, int t,
                            std::vector<double> gammas = {1e-3, 2e-3, 4e-3},
                            uint64_t seed = 20240901);

/// Generalized Gell-Mann generators of su(q) in the fundamental irrep,
/// normalized to Tr(J_a J_b) = 2 delta_ab. Order: symmetric pairs,
/// antisymmetric pairs, then diagonal generators.
std::vector<OperatorMatrix> su_generators(int q);

/// Jordan-Schwinger images sum_{jk} a_j^dag (J_i)_{jk} a_k of the su(q)
/// generators, restricted to the excitation-N block over S_{q,N} in
/// lexicographic order. Guarded to q <= 4 and |S_{q,N}| <= 5000.
std::vector<OperatorMatrix> js_generators(int q, int N);

/// Total-excitation operator on the same block (identity plugged into the
/// quadratic form); equals N * identity there.
OperatorMatrix js_total_excitation(int q, int N);

/// Global qudit action sum_i J^(i) of a fundamental-irrep generator,
/// restricted to the Dicke basis of S_{q,N}, by brute force over q^N.
OperatorMatrix global_qudit_action(const OperatorMatrix& j, int q, int N);

/**
 * Spin-code detection check: every product J_{i1}...J_{is} of generator
 * images with 1 <= s <= t must have <c_i| P |c_j> = lambda_P delta_ij with
 * lambda_P independent of i, within the tolerance.
 */
bool spin_kl_check(const SimplexCode& code, int t, double tolerance = 1e-9);

/// Induced action of a q x q matrix on degree-N monomials (the simplex
/// basis, lex order), by polynomial substitution z_j -> sum_k g_{kj} z_k.
OperatorMatrix sym_induced_action(const OperatorMatrix& g, int q, int N);

struct CovarianceResult {
    bool invariant = false;
    double invariance_residual = 0.0;
    OperatorMatrix logical;  // K x K, <c_i| U(g) |c_j>
};

/// Whether the codespace is invariant under the induced action of g, and
/// the logical matrix it implements when it is.
CovarianceResult covariance_check(const SimplexCode& code, const OperatorMatrix& g,
                                  double tolerance = 1e-9);

/// Order of the group generated by the matrices modulo global phase
/// (each element is phase-normalized before comparison); -1 once the
/// closure exceeds max_order.
int projective_group_order(const std::vector<OperatorMatrix>& generators, double tolerance = 1e-6,
                           int max_order = 256);

/// Max deviation of U from unitarity, ||U^dag U - I||.
double unitarity_defect(const OperatorMatrix& u);

}  // namespace simplexcodes

#endif
