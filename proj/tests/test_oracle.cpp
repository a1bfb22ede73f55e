#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "simplexcodes/examples.hpp"
#include "simplexcodes/oracle.hpp"

using namespace simplexcodes;
using Complex = std::complex<double>;

namespace {

// Structure coefficients of [J_a, J_b] in the fundamental irrep, read off
// with the trace form Tr(J_a J_b) = 2 delta_ab.
std::vector<Complex> commutator_coefficients(const std::vector<OperatorMatrix>& gens, size_t a,
                                             size_t b) {
    const OperatorMatrix comm = gens[a] * gens[b] - gens[b] * gens[a];
    std::vector<Complex> out;
    for (const OperatorMatrix& g : gens) out.push_back((comm * g).trace() / 2.0);
    return out;
}

}  // namespace

TEST_CASE("dicke_expand") {
    const DenseState state = dicke_expand(SimplexPoint{1, 0, 2});
    REQUIRE(state.size() == 27);
    // Strings 022, 202, 220 in base-3 (big-endian): 8, 20, 24.
    const double amp = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(state[8] - amp) < 1e-15);
    CHECK(std::abs(state[20] - amp) < 1e-15);
    CHECK(std::abs(state[24] - amp) < 1e-15);
    CHECK(std::abs(state.norm() - 1.0) < 1e-12);

    const DenseState pure = dicke_expand(SimplexPoint{4, 0});
    CHECK(std::abs(pure[0] - 1.0) < 1e-15);
    CHECK(pure.cwiseAbs().sum() == doctest::Approx(1.0));

    // Support size equals the multinomial coefficient.
    for (const SimplexPoint& n : enumerate_simplex(3, 4)) {
        const DenseState s = dicke_expand(n);
        int support = 0;
        for (int i = 0; i < s.size(); ++i)
            if (std::abs(s[i]) > 0) ++support;
        CHECK(Int(support) == multinomial(4, n));
    }
}

TEST_CASE("deletion oracle agrees with the closed form") {
    CHECK(deletion_oracle_check(SimplexPoint{2, 2}, SimplexPoint{1, 0}) <= 1e-12);
    CHECK(deletion_oracle_check(SimplexPoint{2, 2}, SimplexPoint{0, 0}) == 0.0);  // t = 0
    for (const SimplexPoint& n : enumerate_simplex(3, 5)) {
        for (int t = 1; t <= 2; ++t) {
            for (const SimplexPoint& e : enumerate_simplex(3, t)) {
                CHECK(deletion_oracle_check(n, e, false) <= 1e-12);
                CHECK(deletion_oracle_check(n, e, true) <= 1e-12);  // order independence
            }
        }
    }
}

TEST_CASE("ad_kraus") {
    CHECK((ad_kraus(4, 0, 0.0) - OperatorMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    const double gamma = 0.37;
    const OperatorMatrix a1 = ad_kraus(3, 1, gamma);
    CHECK(std::abs(a1(0, 1) - std::sqrt(gamma)) < 1e-15);

    // Completeness: sum_x A_x^dag A_x is the identity on the truncated space.
    OperatorMatrix sum = OperatorMatrix::Zero(7, 7);
    for (int x = 0; x <= 6; ++x) {
        const OperatorMatrix a = ad_kraus(6, x, 0.3);
        sum += a.adjoint() * a;
    }
    CHECK((sum - OperatorMatrix::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gram table is Hermitian and detects the distance") {
    const SimplexCode n7 = load_fixture("n7-fock");
    const GramTable table = build_ad_gram_table(n7, 2, 0.1);
    const size_t n_errors = table.errors.size();
    for (size_t a = 0; a < n_errors; ++a)
        for (size_t b = 0; b < n_errors; ++b)
            for (int i = 0; i < table.K; ++i)
                for (int j = 0; j < table.K; ++j)
                    CHECK(std::abs(table.block(a, b)(i, j) - std::conj(table.block(b, a)(j, i))) <
                          1e-12);

    const std::vector<double> gammas{0.01, 0.1, 0.3};
    CHECK(ad_kl_gram(n7, 2, gammas).passed);
    CHECK(!ad_kl_gram(n7, 3, gammas).passed);
    CHECK(ad_kl_gram(load_fixture("wasilewski-banaczek"), 1, gammas).passed);
}

TEST_CASE("exact checker and damping oracle agree on every Fock fixture") {
    for (const char* name : {"n7-fock", "n9-fock", "wasilewski-banaczek", "s44-fock", "bd8-n11"}) {
        CAPTURE(name);
        const SimplexCode code = load_fixture(name);
        const int stated = *code.distance - 1;
        for (int t = stated; t <= stated + 1; ++t) {
            const bool exact = check_kl(code, t).passed();
            const bool oracle = ad_kl_gram(code, t, {0.01, 0.1, 0.3}).passed;
            CHECK(exact == oracle);
        }
    }
}

TEST_CASE("fidelity leading coefficient") {
    const FidelityFit n3 = fidelity_series(load_fixture("wasilewski-banaczek"), 1);
    CHECK(n3.expected_leading_coefficient == 3.0);
    CHECK(std::abs(n3.fitted_leading_coefficient - 3.0) / 3.0 < 0.01);
    CHECK(n3.state_dependence < 1e-9);

    CHECK(fidelity_at(load_fixture("n7-fock"), 2, 0.0) == 1.0);
}

TEST_CASE("fidelity coefficient is mode-count independent") {
    // Same (N, t) on two and on four modes: both fits give C(4, 2) = 6.
    const FidelityFit two_modes = fidelity_series(construction_gmde(1, 1, 1, -1), 1);
    const FidelityFit four_modes = fidelity_series(load_fixture("s44-fock"), 1);
    CHECK(two_modes.expected_leading_coefficient == 6.0);
    CHECK(four_modes.expected_leading_coefficient == 6.0);
    CHECK(std::abs(two_modes.fitted_leading_coefficient - 6.0) / 6.0 < 0.01);
    CHECK(std::abs(four_modes.fitted_leading_coefficient - 6.0) / 6.0 < 0.01);
}

TEST_CASE("fundamental generators at q=2 are the Pauli matrices") {
    const auto gens = su_generators(2);
    REQUIRE(gens.size() == 3);
    OperatorMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    sz << 1, 0, 0, -1;
    CHECK((gens[0] - sx).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((gens[1] - sy).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((gens[2] - sz).cwiseAbs().maxCoeff() < 1e-15);

    // js at N = 1 is the fundamental irrep itself, up to basis order.
    const auto js = js_generators(2, 1);
    // Basis is lex: (0,1) = |mode-1 excited>, (1,0) = |mode-0 excited>.
    for (size_t a = 0; a < gens.size(); ++a) {
        OperatorMatrix reordered(2, 2);
        reordered << js[a](1, 1), js[a](1, 0), js[a](0, 1), js[a](0, 0);
        CHECK((reordered - gens[a]).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("trace normalization of the fundamental generators") {
    for (int q = 2; q <= 4; ++q) {
        const auto gens = su_generators(q);
        REQUIRE(gens.size() == static_cast<size_t>(q * q - 1));
        for (size_t a = 0; a < gens.size(); ++a) {
            CHECK(std::abs(gens[a].trace()) < 1e-14);
            CHECK((gens[a] - gens[a].adjoint()).cwiseAbs().maxCoeff() < 1e-14);
            for (size_t b = 0; b < gens.size(); ++b) {
                const Complex tr = (gens[a] * gens[b]).trace();
                CHECK(std::abs(tr - (a == b ? 2.0 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("js images satisfy the su(q) commutation relations") {
    for (int q : {2, 3}) {
        const auto fund = su_generators(q);
        for (int N = 1; N <= 5; ++N) {
            const auto js = js_generators(q, N);
            for (size_t a = 0; a < js.size(); ++a) {
                CHECK((js[a] - js[a].adjoint()).cwiseAbs().maxCoeff() < 1e-12);
                CHECK(std::abs(js[a].trace()) < 1e-9);
                for (size_t b = a + 1; b < js.size(); ++b) {
                    const auto coeff = commutator_coefficients(fund, a, b);
                    OperatorMatrix expected = OperatorMatrix::Zero(js[a].rows(), js[a].cols());
                    for (size_t c = 0; c < js.size(); ++c) expected += coeff[c] * js[c];
                    const OperatorMatrix comm = js[a] * js[b] - js[b] * js[a];
                    CHECK((comm - expected).cwiseAbs().maxCoeff() < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("total excitation is constant on the block") {
    for (int q : {2, 3}) {
        for (int N = 1; N <= 4; ++N) {
            const OperatorMatrix total = js_total_excitation(q, N);
            CHECK((total - static_cast<double>(N) * OperatorMatrix::Identity(total.rows(), total.cols()))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("global qudit action equals the quadratic image") {
    for (int q : {2, 3}) {
        const auto fund = su_generators(q);
        for (int N = 1; N <= (q == 2 ? 5 : 4); ++N) {
            const auto js = js_generators(q, N);
            for (size_t a = 0; a < fund.size(); ++a) {
                const OperatorMatrix global = global_qudit_action(fund[a], q, N);
                CHECK((global - js[a]).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("spin detection check on relabeled codes") {
    const SimplexCode spin7 = map_space(load_fixture("n7-fock"), SpaceTag::Spin);
    CHECK(spin_kl_check(spin7, 2));
    CHECK(spin_kl_check(spin7, 0));  // orthonormality only

    const SimplexCode spin3 = map_space(load_fixture("wasilewski-banaczek"), SpaceTag::Spin);
    CHECK(spin_kl_check(spin3, 1));

    CHECK_THROWS_AS(spin_kl_check(load_fixture("n7-fock"), 2), std::invalid_argument);
}

TEST_CASE("induced symmetric action") {
    // Identity and global phases act as scalars of degree N.
    const SimplexCode bd8 = load_fixture("bd8-n11");
    const CovarianceResult ident = covariance_check(bd8, OperatorMatrix::Identity(2, 2));
    CHECK(ident.invariant);
    CHECK((ident.logical - OperatorMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    const double theta = 0.731;
    const CovarianceResult phase =
        covariance_check(bd8, std::polar(1.0, theta) * OperatorMatrix::Identity(2, 2));
    CHECK(phase.invariant);
    const Complex expected = std::polar(1.0, 11.0 * theta);
    CHECK(std::abs(phase.logical(0, 0) - expected) < 1e-9);
    CHECK(std::abs(phase.logical(1, 1) - expected) < 1e-9);

    // The induced action of a unitary is unitary.
    OperatorMatrix rot(2, 2);
    rot << std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3);
    CHECK(unitarity_defect(sym_induced_action(rot, 2, 6)) < 1e-12);
}

TEST_CASE("a generic code is not covariant") {
    SimplexCode code;
    code.q = 2;
    code.N = 5;
    code.K = 2;
    code.space = SpaceTag::Fock;
    code.amplitudes.resize(2);
    code.amplitudes[0].emplace(SimplexPoint{5, 0}, SqrtRational::sqrt_of(Rational(1)));
    code.amplitudes[1].emplace(SimplexPoint{4, 1}, SqrtRational::sqrt_of(Rational(1)));
    OperatorMatrix rot(2, 2);
    rot << std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3);
    CHECK(!covariance_check(code, rot).invariant);
}

TEST_CASE("projective closure") {
    OperatorMatrix x(2, 2), t(2, 2);
    x << 0, 1, 1, 0;
    t << 1, 0, 0, std::polar(1.0, M_PI / 4);
    CHECK(projective_group_order({x}) == 2);
    CHECK(projective_group_order({t}) == 8);
    CHECK(projective_group_order({x, t}) == 16);
    CHECK(projective_group_order({x, t}, 1e-6, 8) == -1);  // cap respected
}
