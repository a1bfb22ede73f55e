#include "simplexcodes/examples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "simplexcodes/oracle.hpp"
#include "simplexcodes/tverberg.hpp"

namespace simplexcodes {

bool codes_amplitudes_equal(const SimplexCode& a, const SimplexCode& b) {
    if (a.q != b.q || a.N != b.N || a.K != b.K) return false;
    for (int i = 0; i < a.K; ++i)
        if (a.logical(i) != b.logical(i)) return false;
    return true;
}

SimplexCode reverse_modes(const SimplexCode& code) {
    if (code.q != 2) throw std::invalid_argument("reverse_modes: only defined for q = 2");
    SimplexCode out = code;
    for (auto& logical : out.amplitudes) {
        std::map<SimplexPoint, SqrtRational> swapped;
        for (const auto& [point, amp] : logical) swapped.emplace(SimplexPoint{point[1], point[0]}, amp);
        logical = std::move(swapped);
    }
    return out;
}

L1Code s44_l1_code() {
    L1Code code;
    code.q = 4;
    code.N = 4;
    for (const SimplexPoint& s : enumerate_simplex(4, 2)) {
        std::vector<int> doubled(s.coords);
        for (int& v : doubled) v *= 2;
        code.points.emplace_back(std::move(doubled));
    }
    code.points.emplace_back(std::vector<int>{1, 1, 1, 1});
    code.canonicalize();
    min_distance(code);
    return code;
}

namespace {

struct ExampleSpec {
    const char* name;
    std::function<ExampleResult()> run;
};

ExampleResult pass(const std::string& name, const std::string& detail) {
    return {name, ExampleStatus::Pass, detail};
}

ExampleResult fail(const std::string& name, const std::string& detail) {
    return {name, ExampleStatus::Fail, detail};
}

std::string amp_table(const SimplexCode& code) {
    std::string out;
    for (int i = 0; i < code.K; ++i) {
        if (i) out += "; ";
        bool first = true;
        for (const auto& [point, amp] : code.logical(i)) {
            if (!first) out += ", ";
            first = false;
            out += (amp.sign < 0 ? "-" : "") + std::string("sqrt(") +
                   rational_to_string(amp.square()) + ")|" + point.key() + ">";
        }
    }
    return out;
}

ExampleResult run_family_example(const std::string& name, int g, int m, int delta, int eps,
                                 const std::string& fixture, bool modes_swapped) {
    const SimplexCode constructed = construction_gmde(g, m, delta, eps);
    const SimplexCode expected = load_fixture(fixture);
    const SimplexCode compare = modes_swapped ? reverse_modes(constructed) : constructed;
    if (!codes_amplitudes_equal(compare, expected))
        return fail(name, "constructed amplitudes differ from the recorded ones");
    if (!constructed.distance || *constructed.distance != *expected.distance)
        return fail(name, "certified distance mismatch");
    return pass(name, "N=" + std::to_string(constructed.N) + " d=" +
                          std::to_string(*constructed.distance) + "  " + amp_table(constructed) +
                          (modes_swapped ? "  (recorded with modes swapped)" : ""));
}

ExampleResult run_pipeline_example(const std::string& name, const L1Code& l1, int K, int t,
                                   SpaceTag space, const std::string& fixture) {
    const PointCloud cloud = kl_point_cloud(l1, t);
    const TverbergWitness witness = find_witness(cloud, K, WitnessStrategy::Orbit);
    const SimplexCode code = assemble_from_witness(witness, cloud, space);
    const SimplexCode expected = load_fixture(fixture);
    if (!codes_amplitudes_equal(code, expected))
        return fail(name, "assembled amplitudes differ from the recorded ones");
    if (!code.distance || *code.distance != t + 1) return fail(name, "distance not certified");
    return pass(name, "|B|=" + std::to_string(l1.size()) + " K=" + std::to_string(K) +
                          " d=" + std::to_string(t + 1) + "  " + amp_table(code));
}

ExampleResult run_n3(const std::string& name, SpaceTag space, const std::string& fixture) {
    L1Code b;
    b.q = 3;
    b.N = 3;
    b.points = {SimplexPoint{3, 0, 0}, SimplexPoint{0, 3, 0}, SimplexPoint{0, 0, 3},
                SimplexPoint{1, 1, 1}};
    b.canonicalize();
    if (min_distance(b) != 2) return fail(name, "seed l1 code distance is not 2");
    return run_pipeline_example(name, b, 2, 1, space, fixture);
}

ExampleResult run_pi_n6(const std::string& name) {
    const L1Code b = scaled_simplex_code(2, 2);
    const Int bound = binomial(Int(b.N + 2 - 1), b.q - 1) + 1;
    if (Int(b.size()) != bound || b.size() != 22)
        return fail(name, "scaled code size does not meet the partition bound");
    return run_pipeline_example(name, b, 2, 2, SpaceTag::PI, "pi-n6");
}

ExampleResult run_s44(const std::string& name) {
    L1Code b = s44_l1_code();
    if (b.size() != 11 || *b.certified_distance != 2)
        return fail(name, "eleven-point seed code is wrong");
    const PointCloud cloud = kl_point_cloud(b, 1);
    const TverbergWitness witness = find_witness(cloud, 3, WitnessStrategy::Orbit);
    // The recorded solution: 1/4 on the pure orbit, 1/6 on the double orbit,
    // 1 on the all-ones point.
    for (const auto& [point, weight] : witness.weights) {
        std::vector<int> cls(point.coords);
        std::sort(cls.begin(), cls.end(), std::greater<int>());
        const Rational expected = cls[0] == 4   ? Rational(1, 4)
                                  : cls[0] == 2 ? Rational(1, 6)
                                                : Rational(1);
        if (weight != expected) return fail(name, "witness weights differ from (1/4, 1/6, 1)");
    }
    const SimplexCode code = assemble_from_witness(witness, cloud, SpaceTag::Fock);
    if (!codes_amplitudes_equal(code, load_fixture("s44-fock")))
        return fail(name, "assembled amplitudes differ from the recorded ones");
    return pass(name, "|B|=11 K=3 d=2  " + amp_table(code));
}

ExampleResult run_fixture_example(const std::string& name, const std::string& fixture, int t) {
    const SimplexCode code = load_fixture(fixture);  // load re-runs the exact check
    if (!code.distance || *code.distance != t + 1) return fail(name, "distance not certified");
    return pass(name, "fixture verified, d=" + std::to_string(t + 1) + "  " + amp_table(code));
}

ExampleResult run_bd8(const std::string& name) {
    const SimplexCode code = load_fixture("bd8-n11");
    if (!code.distance || *code.distance != 3) return fail(name, "distance not certified");
    const OperatorMatrix x_gate = [] {
        OperatorMatrix m(2, 2);
        m << 0, 1, 1, 0;
        return m;
    }();
    const OperatorMatrix t_gate = [] {
        OperatorMatrix m = OperatorMatrix::Zero(2, 2);
        m(0, 0) = 1;
        m(1, 1) = std::polar(1.0, M_PI / 4);
        return m;
    }();
    const CovarianceResult rx = covariance_check(code, x_gate, 1e-9);
    const CovarianceResult rt = covariance_check(code, t_gate, 1e-9);
    if (!rx.invariant || !rt.invariant) return fail(name, "codespace not invariant under X/T");
    if (unitarity_defect(rx.logical) > 1e-9 || unitarity_defect(rt.logical) > 1e-9)
        return fail(name, "logical action is not unitary");
    const int order = projective_group_order({rx.logical, rt.logical});
    if (order <= 0 || 16 % order != 0)
        return fail(name, "logical group order " + std::to_string(order) + " does not divide 16");
    return pass(name, "invariant under X,T; logical group order " + std::to_string(order));
}

ExampleResult run_sigma(const std::string& name) {
    const SimplexCode code = load_fixture("sigma-360phi");
    if (!fixture_is_structural(code)) return fail(name, "expected a structural fixture");
    return {name, ExampleStatus::Skipped,
            "structural fixture ((5,3,3,2) on qutrits): amplitudes not published, skipped"};
}

const std::vector<ExampleSpec>& example_table() {
    static const std::vector<ExampleSpec> table = {
        {"n7", [] { return run_family_example("n7", 2, 1, 2, -1, "n7-fock", false); }},
        {"n9", [] { return run_family_example("n9", 3, 1, 2, +1, "n9-fock", true); }},
        {"n21", [] { return run_family_example("n21", 4, 2, 4, -1, "n21-fock", false); }},
        {"n3", [] { return run_n3("n3", SpaceTag::Fock, "wasilewski-banaczek"); }},
        {"three-qutrits", [] { return run_n3("three-qutrits", SpaceTag::PI, "three-qutrits"); }},
        {"pi-n6", [] { return run_pi_n6("pi-n6"); }},
        {"s44", [] { return run_s44("s44"); }},
        {"ouyang-18", [] { return run_fixture_example("ouyang-18", "ouyang-qutrit-18", 2); }},
        {"bd8", [] { return run_bd8("bd8"); }},
        {"sigma360", [] { return run_sigma("sigma360"); }},
    };
    return table;
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> out;
    for (const ExampleSpec& spec : example_table()) out.emplace_back(spec.name);
    return out;
}

std::vector<ExampleResult> run_examples(const std::string& name) {
    std::vector<ExampleResult> out;
    bool matched = false;
    for (const ExampleSpec& spec : example_table()) {
        if (!(name.empty() || name == "all" || name == spec.name)) continue;
        matched = true;
        try {
            out.push_back(spec.run());
        } catch (const std::exception& e) {
            out.push_back(fail(spec.name, std::string("exception: ") + e.what()));
        }
    }
    if (!matched) throw std::invalid_argument("unknown example: '" + name + "'");
    return out;
}

}  // namespace simplexcodes
