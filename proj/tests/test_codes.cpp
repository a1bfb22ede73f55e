#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simplexcodes/codes.hpp"
#include "simplexcodes/examples.hpp"

using namespace simplexcodes;

namespace {

struct FixtureCase {
    const char* name;
    int t;
};

const std::vector<FixtureCase> kVerifiedFixtures = {
    {"n7-fock", 2},  {"n9-fock", 2},          {"n21-fock", 4}, {"wasilewski-banaczek", 1},
    {"three-qutrits", 1}, {"pi-n6", 2},       {"s44-fock", 1}, {"ouyang-qutrit-18", 2},
    {"bd8-n11", 2},
};

SqrtRational amp(const SimplexCode& code, int i, std::initializer_list<int> point) {
    return code.logical(i).at(SimplexPoint(point));
}

}  // namespace

TEST_CASE("fixtures pass at their stated order and fail one higher") {
    for (const FixtureCase& fc : kVerifiedFixtures) {
        CAPTURE(fc.name);
        const SimplexCode code = load_fixture(fc.name);
        REQUIRE(code.distance.has_value());
        CHECK(*code.distance == fc.t + 1);

        const KLReport at_t = check_kl(code, fc.t, KLMode::Exact);
        CHECK(at_t.passed());
        CHECK(at_t.declared_distance == fc.t + 1);
        CHECK(at_t.tolerance == 0.0);

        const KLReport beyond = check_kl(code, fc.t + 1, KLMode::Exact);
        CHECK(!beyond.passed());
        bool has_violation = false;
        for (int c = 1; c <= 4; ++c) {
            if (!beyond.condition(c).passed) {
                REQUIRE(beyond.condition(c).violation.has_value());
                has_violation = true;
            }
        }
        CHECK(has_violation);
        CHECK(!beyond.declared_distance.has_value());
    }
    CHECK_THROWS_AS(load_fixture("no-such-code"), std::invalid_argument);
}

TEST_CASE("K=1 code passes trivially") {
    SimplexCode code;
    code.q = 2;
    code.N = 3;
    code.K = 1;
    code.space = SpaceTag::Fock;
    code.amplitudes.resize(1);
    code.amplitudes[0].emplace(SimplexPoint{1, 2}, SqrtRational::sqrt_of(make_rational(1, 2)));
    code.amplitudes[0].emplace(SimplexPoint{3, 0}, SqrtRational::sqrt_of(make_rational(1, 2)));
    const KLReport report = check_kl(code, 0);
    CHECK(report.passed());
    CHECK(report.declared_distance == 1);
}

TEST_CASE("float mode matches exact mode on a fixture") {
    const SimplexCode code = load_fixture("n7-fock");
    CHECK(check_kl(code, 2, KLMode::Float, 1e-9).passed());
    const KLReport fail = check_kl(code, 3, KLMode::Float, 1e-9);
    CHECK(!fail.passed());
    CHECK(fail.tolerance == 1e-9);
}

TEST_CASE("construction family: N=7 code") {
    const SimplexCode code = construction_gmde(2, 1, 2, -1);
    CHECK(code.q == 2);
    CHECK(code.N == 7);
    CHECK(*code.distance == 3);
    CHECK(amp(code, 0, {0, 7}) == SqrtRational(1, make_rational(3, 10)));
    CHECK(amp(code, 0, {5, 2}) == SqrtRational(1, make_rational(7, 10)));
    CHECK(amp(code, 1, {2, 5}) == SqrtRational(1, make_rational(7, 10)));
    CHECK(amp(code, 1, {7, 0}) == SqrtRational(-1, make_rational(3, 10)));
    CHECK(codes_amplitudes_equal(code, load_fixture("n7-fock")));
}

TEST_CASE("construction family: N=21 code") {
    const SimplexCode code = construction_gmde(4, 2, 4, -1);
    CHECK(code.N == 21);
    CHECK(*code.distance == 5);
    CHECK(amp(code, 0, {0, 21}) == SqrtRational(1, make_rational(5, 68)));
    CHECK(amp(code, 0, {8, 13}) == SqrtRational(1, make_rational(7, 12)));
    CHECK(amp(code, 0, {17, 4}) == SqrtRational(1, make_rational(35, 102)));
    CHECK(amp(code, 1, {13, 8}) == SqrtRational(-1, make_rational(7, 12)));
}

TEST_CASE("construction family: N=9 code carries the recorded amplitudes") {
    const SimplexCode code = construction_gmde(3, 1, 2, +1);
    CHECK(code.N == 9);
    CHECK(*code.distance == 3);
    CHECK(amp(code, 0, {0, 9}) == SqrtRational(1, make_rational(1, 4)));
    CHECK(amp(code, 0, {6, 3}) == SqrtRational(1, make_rational(3, 4)));
    // The recorded table lists the two modes in the opposite order.
    CHECK(codes_amplitudes_equal(reverse_modes(code), load_fixture("n9-fock")));
}

TEST_CASE("family is unit-norm across the parameter grid") {
    for (int g = 1; g <= 5; ++g)
        for (int m = 0; m <= 3; ++m)
            for (int delta = 0; delta <= 6; ++delta)
                for (int eps : {-1, +1}) {
                    const SimplexCode code = construction_gmde(g, m, delta, eps);
                    CHECK(code.norm_squared(0) == Rational(1));
                    CHECK(code.norm_squared(1) == Rational(1));
                }
}

TEST_CASE("family certified order") {
    CHECK(gmde_certified_t(2, 1, 2, -1) == 2);
    CHECK(gmde_certified_t(3, 1, 2, +1) == 2);
    CHECK(gmde_certified_t(4, 2, 4, -1) == 4);
    CHECK(gmde_certified_t(1, 1, 1, -1) == 1);
    CHECK(gmde_certified_t(1, 1, 1, +1) == 0);
    // Sharpness: the N=7 code has distance exactly 3.
    CHECK(!check_kl(construction_gmde(2, 1, 2, -1), 3).passed());
}

TEST_CASE("map_space carries or clears the distance") {
    const SimplexCode fock = load_fixture("n7-fock");
    const SimplexCode same = map_space(fock, SpaceTag::Fock);
    CHECK(codes_amplitudes_equal(same, fock));
    CHECK(same.distance == fock.distance);

    const SimplexCode pi = map_space(fock, SpaceTag::PI);
    CHECK(pi.space == SpaceTag::PI);
    CHECK(*pi.distance == 3);
    CHECK(codes_amplitudes_equal(pi, fock));

    // Round trip keeps amplitudes bit-identical.
    const SimplexCode back = map_space(map_space(pi, SpaceTag::Spin), SpaceTag::PI);
    CHECK(codes_amplitudes_equal(back, fock));

    // Spin-source relabeling at q = 2 keeps the distance...
    const SimplexCode spin2 = map_space(fock, SpaceTag::Spin);
    CHECK(*spin2.distance == 3);
    CHECK(*map_space(spin2, SpaceTag::PI).distance == 3);

    // ...but at q = 3 it is cleared and can be re-derived.
    const SimplexCode spin3 = map_space(load_fixture("wasilewski-banaczek"), SpaceTag::Spin);
    REQUIRE(spin3.distance.has_value());
    const SimplexCode cleared = map_space(spin3, SpaceTag::PI);
    CHECK(!cleared.distance.has_value());
    CHECK(check_kl(cleared, 1).passed());
}

TEST_CASE("witness codes satisfy the per-term orthogonality") {
    // Supports of distinct logical vectors never meet, even after an
    // (e, f) shift: the seed code's distance exceeds t.
    for (const char* name : {"wasilewski-banaczek", "pi-n6", "s44-fock"}) {
        CAPTURE(name);
        const SimplexCode code = load_fixture(name);
        const int t = *code.distance - 1;
        CHECK(code.disjoint_supports());
        const auto errors = enumerate_simplex(code.q, t);
        for (int i = 0; i < code.K; ++i)
            for (int j = 0; j < code.K; ++j) {
                if (i == j) continue;
                for (const auto& e : errors)
                    for (const auto& f : errors)
                        for (const auto& [n, a] : code.logical(i)) {
                            const auto shifted = point_shift(n, e, f);
                            if (shifted) CHECK(code.logical(j).count(*shifted) == 0);
                        }
            }
    }
}

TEST_CASE("assemble_from_witness demands a normalized witness") {
    L1Code b;
    b.q = 3;
    b.N = 3;
    b.points = {SimplexPoint{3, 0, 0}, SimplexPoint{0, 3, 0}, SimplexPoint{0, 0, 3},
                SimplexPoint{1, 1, 1}};
    b.canonicalize();
    const PointCloud cloud = kl_point_cloud(b, 1);
    TverbergWitness w = radon_witness_k2(cloud);
    // Radon weights are raw; scaling them breaks the precondition.
    for (auto& [point, weight] : w.weights) weight *= 2;
    CHECK_THROWS_AS(assemble_from_witness(w, cloud, SpaceTag::PI), std::invalid_argument);
    w.normalize();
    const SimplexCode code = assemble_from_witness(w, cloud, SpaceTag::PI);
    CHECK(*code.distance == 2);
    CHECK(codes_amplitudes_equal(code, load_fixture("three-qutrits")));
}

TEST_CASE("structural fixture") {
    const SimplexCode sigma = load_fixture("sigma-360phi");
    CHECK(fixture_is_structural(sigma));
    CHECK(sigma.q == 3);
    CHECK(sigma.N == 5);
    CHECK(sigma.K == 3);
    CHECK(!sigma.distance.has_value());
    CHECK(fixture_names().size() == 10);
}
