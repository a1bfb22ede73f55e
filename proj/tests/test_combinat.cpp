#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "simplexcodes/combinat.hpp"

using namespace simplexcodes;

namespace {

// Independent Pascal-triangle binomials for oracle comparisons.
long long pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<long long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> next(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
        row = next;
    }
    return row[static_cast<size_t>(k)];
}

// xorshift for reproducible random points.
struct Rng {
    uint64_t s = 0x9E3779B97F4A7C15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

SimplexPoint random_point(Rng& rng, int q, int N) {
    std::vector<int> coords(static_cast<size_t>(q), 0);
    for (int i = 0; i < N; ++i) ++coords[static_cast<size_t>(rng.below(q))];
    return SimplexPoint(coords);
}

}  // namespace

TEST_CASE("enumerate_simplex sizes and order") {
    CHECK(enumerate_simplex(3, 3).size() == 10);

    const auto single = enumerate_simplex(1, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == SimplexPoint{5});

    // Brute-force count of 4-tuples summing to 4.
    int brute = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int d = 0; d <= 4; ++d)
                    if (a + b + c + d == 4) ++brute;
    CHECK(brute == 35);
    CHECK(enumerate_simplex(4, 4).size() == 35);

    for (int q = 1; q <= 5; ++q)
        for (int N = 0; N <= 8; ++N) {
            const auto pts = enumerate_simplex(q, N);
            CHECK(static_cast<long long>(pts.size()) == pascal(N + q - 1, q - 1));
            for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);
            for (const auto& p : pts) CHECK(p.total() == N);
        }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(3, SimplexPoint{1, 0, 2}) == 3);
    CHECK(multinomial(5, SimplexPoint{5, 0}) == 1);
    const std::vector<int> off_simplex{1, 1, 2, 1};
    CHECK(multinomial(4, std::span<const int>(off_simplex)) == 0);
    const std::vector<int> negative{-1, 5};
    CHECK(multinomial(4, std::span<const int>(negative)) == 0);
}

TEST_CASE("multinomial counts strings exhaustively") {
    for (const auto& [q, N] : std::vector<std::pair<int, int>>{{2, 10}, {3, 7}, {4, 5}, {5, 5}}) {
        long long total = 1;
        for (int i = 0; i < N; ++i) total *= q;
        REQUIRE(total <= 100000);
        std::map<SimplexPoint, long long> counts;
        for (long long idx = 0; idx < total; ++idx) {
            std::vector<int> comp(static_cast<size_t>(q), 0);
            long long rest = idx;
            for (int i = 0; i < N; ++i) {
                ++comp[static_cast<size_t>(rest % q)];
                rest /= q;
            }
            ++counts[SimplexPoint(comp)];
        }
        for (const auto& [point, count] : counts)
            CHECK(multinomial(N, point) == Int(count));
    }
}

TEST_CASE("composition") {
    CHECK(composition("022", 3) == SimplexPoint{1, 0, 2});
    CHECK(composition("", 2) == SimplexPoint{0, 0});
    CHECK(composition("210210", 3) == SimplexPoint{2, 2, 2});
    CHECK_THROWS_AS(composition("03", 3), std::invalid_argument);
    CHECK_THROWS_AS(composition("0a", 2), std::invalid_argument);
}

TEST_CASE("d1 examples") {
    CHECK(d1(SimplexPoint{3, 0, 0}, SimplexPoint{1, 1, 1}) == 2);
    const SimplexPoint x{2, 1, 4};
    CHECK(d1(x, x) == 0);
    CHECK(d1(SimplexPoint{6, 0, 0, 0, 0, 0}, SimplexPoint{3, 3, 0, 0, 0, 0}) == 3);
    CHECK_THROWS_AS(d1(SimplexPoint{1, 0}, SimplexPoint{1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(d1(SimplexPoint{2, 0}, SimplexPoint{1, 0}), std::invalid_argument);
}

TEST_CASE("d1 is a metric") {
    Rng rng;
    for (int trial = 0; trial < 500; ++trial) {
        const int q = 2 + rng.below(4);       // q <= 5
        const int N = 1 + rng.below(10);      // N <= 10
        const SimplexPoint a = random_point(rng, q, N);
        const SimplexPoint b = random_point(rng, q, N);
        const SimplexPoint c = random_point(rng, q, N);
        CHECK(d1(a, b) >= 0);
        CHECK(d1(a, b) == d1(b, a));
        CHECK((d1(a, b) == 0) == (a == b));
        CHECK(d1(a, c) <= d1(a, b) + d1(b, c));
    }
}

TEST_CASE("generalized_binomial") {
    CHECK(generalized_binomial(make_rational(7, 2), 2) == make_rational(35, 8));
    CHECK(generalized_binomial(Rational(5), 2) == Rational(10));
    CHECK(generalized_binomial(make_rational(5, 2), 2) == make_rational(15, 8));
    CHECK(generalized_binomial(make_rational(-3, 2), 0) == Rational(1));
    // Falling factorial at a negative integer top is a total function.
    CHECK(generalized_binomial(Rational(-2), 2) == Rational(3));
}

TEST_CASE("vandermonde identities hold everywhere in range") {
    for (int q = 1; q <= 4; ++q)
        for (int N = 0; N <= 8; ++N)
            for (int t = 0; t <= N; ++t)
                for (const SimplexPoint& n : enumerate_simplex(q, N))
                    CHECK(vandermonde_identity_check(N, t, n));
}

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(make_rational(4, 6)) == "2/3");
    CHECK(rational_to_string(make_rational(-4, 6)) == "-2/3");
    CHECK(rational_to_string(make_rational(5, 1)) == "5");
    CHECK(parse_rational("35/8") == make_rational(35, 8));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("x/3"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("simplex basis lookup") {
    const SimplexBasis basis(3, 4);
    CHECK(basis.size() == 15);
    for (int i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis.point(i)) == i);
    CHECK(basis.index_of(SimplexPoint{4, 0, 1}) == -1);
}
