#include "simplexcodes/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simplexcodes {

std::string to_string(SpaceTag tag) {
    switch (tag) {
        case SpaceTag::PI: return "pi";
        case SpaceTag::Fock: return "fock";
        case SpaceTag::Spin: return "spin";
    }
    throw std::logic_error("unreachable space tag");
}

SpaceTag space_tag_from_string(const std::string& s) {
    if (s == "pi") return SpaceTag::PI;
    if (s == "fock") return SpaceTag::Fock;
    if (s == "spin") return SpaceTag::Spin;
    throw std::invalid_argument("unknown space tag: '" + s + "'");
}

Rational SimplexCode::norm_squared(int i) const {
    Rational sum(0);
    for (const auto& [point, amp] : logical(i)) sum += amp.square();
    return sum;
}

bool SimplexCode::disjoint_supports() const {
    std::map<SimplexPoint, int> owner;
    for (int i = 0; i < K; ++i)
        for (const auto& [point, amp] : logical(i))
            if (!owner.emplace(point, i).second) return false;
    return true;
}

std::string KLViolation::to_string() const {
    std::string out = "(i=" + std::to_string(i) + ", j=" + std::to_string(j);
    if (e) out += ", e=" + e->to_string();
    if (f) out += ", f=" + f->to_string();
    out += ") residual " + residual;
    return out;
}

bool KLReport::passed() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const KLConditionReport& c) { return c.passed; });
}

namespace {

// One accumulating sum of a condition check: exact mode keeps a RadicalSum,
// float mode a double. "Zero" means identically zero resp. within tolerance.
struct ConditionSum {
    KLMode mode;
    RadicalSum exact;
    double approx = 0.0;

    void add(const SqrtRational& term) {
        if (mode == KLMode::Exact)
            exact.add(term);
        else
            approx += term.to_double();
    }
    bool is_zero(double tol) const {
        return mode == KLMode::Exact ? exact.is_zero() : std::abs(approx) <= tol;
    }
    double estimate() const { return mode == KLMode::Exact ? exact.estimate() : approx; }
    std::string render() const {
        return mode == KLMode::Exact ? exact.to_string() : std::to_string(approx);
    }
};

void record(KLConditionReport& report, const ConditionSum& sum, double tol, int i, int j,
            const SimplexPoint* e, const SimplexPoint* f) {
    const double est = std::abs(sum.estimate());
    report.worst_residual = std::max(report.worst_residual, est);
    if (!sum.is_zero(tol) && report.passed) {
        report.passed = false;
        KLViolation v;
        v.i = i;
        v.j = j;
        if (e) v.e = *e;
        if (f) v.f = *f;
        v.residual = sum.render();
        v.residual_estimate = sum.estimate();
        report.violation = v;
    }
}

}  // namespace

KLReport check_kl(const SimplexCode& code, int t, KLMode mode, double tolerance) {
    if (t < 0 || t > code.N) throw std::invalid_argument("check_kl: need 0 <= t <= N");
    if (static_cast<int>(code.amplitudes.size()) != code.K)
        throw std::invalid_argument("check_kl: malformed code");

    KLReport report;
    report.t = t;
    report.mode = mode;
    report.tolerance = mode == KLMode::Exact ? 0.0 : tolerance;
    const double tol = report.tolerance;

    // C1: pairwise orthogonality of the logical basis.
    for (int i = 0; i < code.K; ++i) {
        for (int j = i + 1; j < code.K; ++j) {
            ConditionSum sum{mode};
            for (const auto& [n, amp_i] : code.logical(i)) {
                auto it = code.logical(j).find(n);
                if (it != code.logical(j).end()) sum.add(amp_i * it->second);
            }
            record(report.conditions[0], sum, tol, i, j, nullptr, nullptr);
        }
    }

    // C2: equal norms across logical vectors.
    for (int i = 1; i < code.K; ++i) {
        ConditionSum sum{mode};
        sum.add(SqrtRational::of_rational(code.norm_squared(0) - code.norm_squared(i)));
        record(report.conditions[1], sum, tol, 0, i, nullptr, nullptr);
    }

    // C3/C4 share the weighted overlap sum_n a^(i)_n a^(j)_{n-e+f} w(n,e,f)
    // with w = C(N-t, n-e) / sqrt(C(N,n) C(N,n-e+f)).
    const auto errors = enumerate_simplex(code.q, t);
    auto weighted_overlap = [&](int i, int j, const SimplexPoint& e, const SimplexPoint& f,
                                ConditionSum& sum, int sign) {
        for (const auto& [n, amp_i] : code.logical(i)) {
            const auto shifted = point_shift(n, e, f);
            if (!shifted) continue;
            auto it = code.logical(j).find(*shifted);
            if (it == code.logical(j).end()) continue;
            const auto reduced = point_minus(n, e);
            if (!reduced) continue;
            const Int top = multinomial(code.N - t, *reduced);
            if (top == 0) continue;
            const Rational w2 = make_rational(top * top,
                                              multinomial(code.N, n) * multinomial(code.N, *shifted));
            SqrtRational term = amp_i * it->second * SqrtRational::sqrt_of(w2);
            if (sign < 0) term = -term;
            sum.add(term);
        }
    };

    for (const SimplexPoint& e : errors) {
        for (const SimplexPoint& f : errors) {
            for (int i = 0; i < code.K; ++i) {
                for (int j = 0; j < code.K; ++j) {
                    if (i == j) continue;
                    ConditionSum sum{mode};
                    weighted_overlap(i, j, e, f, sum, +1);
                    record(report.conditions[2], sum, tol, i, j, &e, &f);
                }
            }
            for (int i = 0; i < code.K; ++i) {
                for (int j = i + 1; j < code.K; ++j) {
                    ConditionSum sum{mode};
                    weighted_overlap(i, i, e, f, sum, +1);
                    weighted_overlap(j, j, e, f, sum, -1);
                    record(report.conditions[3], sum, tol, i, j, &e, &f);
                }
            }
        }
    }

    if (report.passed()) report.declared_distance = t + 1;
    return report;
}

SimplexCode assemble_from_witness(const TverbergWitness& witness, const PointCloud& cloud,
                                  SpaceTag space) {
    for (int j = 0; j < witness.block_count(); ++j)
        if (witness.block_weight_sum(j) != 1)
            throw std::invalid_argument("assemble_from_witness: witness is not normalized");

    SimplexCode code;
    code.q = cloud.q;
    code.N = cloud.N;
    code.K = witness.block_count();
    code.space = space;
    code.amplitudes.resize(static_cast<size_t>(code.K));
    for (int i = 0; i < code.K; ++i)
        for (const SimplexPoint& h : witness.blocks[static_cast<size_t>(i)])
            code.amplitudes[static_cast<size_t>(i)].emplace(h, SqrtRational::sqrt_of(witness.weights.at(h)));
    code.provenance = "assembled from a " + std::to_string(code.K) + "-block witness at t=" +
                      std::to_string(cloud.t);

    const KLReport report = check_kl(code, cloud.t, KLMode::Exact);
    if (!report.passed())
        throw std::logic_error("assemble_from_witness: exact verification failed (solver bug)");
    code.distance = cloud.t + 1;
    return code;
}

int gmde_certified_t(int g, int m, int delta, int eps) {
    const int by_g = eps == -1 ? g : g - 1;
    return std::min({2 * m, delta, by_g});
}

SimplexCode construction_gmde(int g, int m, int delta, int eps) {
    if (g < 1 || m < 0 || delta < 0) throw std::invalid_argument("construction_gmde: bad parameters");
    if (eps != 1 && eps != -1) throw std::invalid_argument("construction_gmde: eps must be +1 or -1");
    const int n = 2 * g * m + delta + 1;

    const Rational gamma_sq = generalized_binomial(make_rational(n, 2 * g), m) *
                              make_rational(n - 2 * g * m, g * (m + 1));
    std::vector<Rational> amp_sq(static_cast<size_t>(m + 1));
    for (int l = 0; l <= m; ++l) {
        const Rational den = generalized_binomial(make_rational(n, g) - l, m + 1);
        if (den <= 0)
            throw std::invalid_argument("construction_gmde: vanishing normalizer denominator");
        amp_sq[static_cast<size_t>(l)] = gamma_sq * Rational(binomial(Int(m), l)) / den;
    }
    Rational norm(0);
    for (const Rational& a : amp_sq) norm += a;
    if (norm != 1) throw std::logic_error("construction_gmde: amplitudes do not normalize");

    SimplexCode code;
    code.q = 2;
    code.N = n;
    code.K = 2;
    code.space = SpaceTag::Fock;
    code.amplitudes.resize(2);
    for (int l = 0; l <= m; ++l) {
        const SimplexPoint low{g * l, n - g * l};
        const SimplexPoint high{n - g * l, g * l};
        const SqrtRational amp = SqrtRational::sqrt_of(amp_sq[static_cast<size_t>(l)]);
        if (l % 2 == 0) {
            code.amplitudes[0].emplace(low, amp);
            code.amplitudes[1].emplace(high, eps == 1 ? amp : -amp);
        } else {
            code.amplitudes[0].emplace(high, amp);
            code.amplitudes[1].emplace(low, amp);
        }
    }
    code.provenance = "family(g=" + std::to_string(g) + ",m=" + std::to_string(m) +
                      ",delta=" + std::to_string(delta) + ",eps=" + std::to_string(eps) + ")";

    const int t = gmde_certified_t(g, m, delta, eps);
    if (t >= 0) {
        const KLReport report = check_kl(code, t, KLMode::Exact);
        if (!report.passed())
            throw std::logic_error("construction_gmde: certified distance failed verification");
        code.distance = t + 1;
    }
    return code;
}

SimplexCode map_space(const SimplexCode& code, SpaceTag target) {
    SimplexCode out = code;
    if (target == code.space) return out;
    out.space = target;
    const bool preserves = code.space != SpaceTag::Spin || code.q == 2;
    out.provenance += (out.provenance.empty() ? "" : " | ") + std::string("map:") +
                      to_string(code.space) + "->" + to_string(target);
    if (!preserves && code.distance) {
        out.distance.reset();
        out.provenance += " (distance cleared: spin-source relabeling is only an isometry at q=2)";
    }
    return out;
}

namespace {

std::vector<SimplexPoint> permutations_of(const std::vector<int>& pattern) {
    std::vector<int> sorted(pattern);
    std::sort(sorted.begin(), sorted.end());
    std::vector<SimplexPoint> out;
    do {
        out.emplace_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

struct FixtureEntry {
    int sign;
    std::vector<int> point;
    const char* amp_sq;
};

SimplexCode build_fixture(int q, int N, int K, SpaceTag space,
                          const std::vector<std::vector<FixtureEntry>>& rows,
                          const std::string& provenance) {
    SimplexCode code;
    code.q = q;
    code.N = N;
    code.K = K;
    code.space = space;
    code.provenance = provenance;
    code.amplitudes.resize(static_cast<size_t>(K));
    for (int i = 0; i < K; ++i) {
        for (const FixtureEntry& entry : rows[static_cast<size_t>(i)]) {
            code.amplitudes[static_cast<size_t>(i)].emplace(
                SimplexPoint(entry.point), SqrtRational(entry.sign, parse_rational(entry.amp_sq)));
        }
        if (code.norm_squared(i) != 1)
            throw std::logic_error("fixture '" + provenance + "': logical vector not normalized");
    }
    return code;
}

SimplexCode fixture_with_checked_distance(SimplexCode code, int t) {
    if (!check_kl(code, t, KLMode::Exact).passed())
        throw std::logic_error("fixture failed its exact distance check");
    code.distance = t + 1;
    return code;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"n7-fock",  "n9-fock",       "n21-fock", "wasilewski-banaczek", "three-qutrits",
            "pi-n6",    "s44-fock",      "ouyang-qutrit-18", "bd8-n11",     "sigma-360phi"};
}

SimplexCode load_fixture(const std::string& name) {
    if (name == "n7-fock") {
        return fixture_with_checked_distance(
            build_fixture(2, 7, 2, SpaceTag::Fock,
                          {{{+1, {0, 7}, "3/10"}, {+1, {5, 2}, "7/10"}},
                           {{+1, {2, 5}, "7/10"}, {-1, {7, 0}, "3/10"}}},
                          "fixture:n7-fock"),
            2);
    }
    if (name == "n9-fock") {
        return fixture_with_checked_distance(
            build_fixture(2, 9, 2, SpaceTag::Fock,
                          {{{+1, {9, 0}, "1/4"}, {+1, {3, 6}, "3/4"}},
                           {{+1, {6, 3}, "3/4"}, {+1, {0, 9}, "1/4"}}},
                          "fixture:n9-fock"),
            2);
    }
    if (name == "n21-fock") {
        return fixture_with_checked_distance(
            build_fixture(2, 21, 2, SpaceTag::Fock,
                          {{{+1, {0, 21}, "5/68"}, {+1, {8, 13}, "7/12"}, {+1, {17, 4}, "35/102"}},
                           {{+1, {4, 17}, "35/102"}, {-1, {13, 8}, "7/12"}, {-1, {21, 0}, "5/68"}}},
                          "fixture:n21-fock"),
            4);
    }
    if (name == "wasilewski-banaczek" || name == "three-qutrits") {
        const SpaceTag tag = name == "three-qutrits" ? SpaceTag::PI : SpaceTag::Fock;
        return fixture_with_checked_distance(
            build_fixture(3, 3, 2, tag,
                          {{{+1, {3, 0, 0}, "1/3"}, {+1, {0, 3, 0}, "1/3"}, {+1, {0, 0, 3}, "1/3"}},
                           {{+1, {1, 1, 1}, "1"}}},
                          "fixture:" + name),
            1);
    }
    if (name == "pi-n6") {
        std::vector<std::vector<FixtureEntry>> rows(2);
        for (const SimplexPoint& p : permutations_of({6, 0, 0, 0, 0, 0}))
            rows[0].push_back({+1, p.coords, "1/15"});
        rows[0].push_back({+1, {1, 1, 1, 1, 1, 1}, "3/5"});
        for (const SimplexPoint& p : permutations_of({3, 3, 0, 0, 0, 0}))
            rows[1].push_back({+1, p.coords, "1/15"});
        return fixture_with_checked_distance(
            build_fixture(6, 6, 2, SpaceTag::PI, rows, "fixture:pi-n6"), 2);
    }
    if (name == "s44-fock") {
        std::vector<std::vector<FixtureEntry>> rows(3);
        for (const SimplexPoint& p : permutations_of({4, 0, 0, 0})) rows[0].push_back({+1, p.coords, "1/4"});
        for (const SimplexPoint& p : permutations_of({2, 2, 0, 0})) rows[1].push_back({+1, p.coords, "1/6"});
        rows[2].push_back({+1, {1, 1, 1, 1}, "1"});
        return fixture_with_checked_distance(
            build_fixture(4, 4, 3, SpaceTag::Fock, rows, "fixture:s44-fock"), 1);
    }
    if (name == "ouyang-qutrit-18") {
        return fixture_with_checked_distance(
            build_fixture(2, 18, 3, SpaceTag::Fock,
                          {{{+1, {18, 0}, "1/9"}, {+1, {9, 9}, "7/9"}, {+1, {0, 18}, "1/9"}},
                           {{+1, {15, 3}, "1/3"}, {+1, {6, 12}, "2/3"}},
                           {{+1, {12, 6}, "2/3"}, {+1, {3, 15}, "1/3"}}},
                          "fixture:ouyang-qutrit-18"),
            2);
    }
    if (name == "bd8-n11") {
        return fixture_with_checked_distance(
            build_fixture(2, 11, 2, SpaceTag::Fock,
                          {{{+1, {0, 11}, "5/16"}, {+1, {8, 3}, "11/16"}},
                           {{+1, {3, 8}, "11/16"}, {+1, {11, 0}, "5/16"}}},
                          "fixture:bd8-n11"),
            2);
    }
    if (name == "sigma-360phi") {
        SimplexCode code;
        code.q = 3;
        code.N = 5;
        code.K = 3;
        code.space = SpaceTag::PI;
        code.amplitudes.resize(3);
        code.provenance = "fixture:sigma-360phi (structural: no published amplitudes)";
        return code;
    }
    throw std::invalid_argument("unknown fixture: '" + name + "'");
}

bool fixture_is_structural(const SimplexCode& code) {
    return std::all_of(code.amplitudes.begin(), code.amplitudes.end(),
                       [](const auto& m) { return m.empty(); });
}

}  // namespace simplexcodes
