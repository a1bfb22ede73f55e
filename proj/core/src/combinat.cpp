#include "simplexcodes/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simplexcodes {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            Int num(std::string(s), 10);
            return make_rational(num, 1);
        }
        Int num(std::string(s.substr(0, slash)), 10);
        Int den(std::string(s.substr(slash + 1)), 10);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rational_to_double(const Rational& r) { return r.get_d(); }

SimplexPoint::SimplexPoint(std::vector<int> c) : coords(std::move(c)) {
    for (int v : coords)
        if (v < 0) throw std::invalid_argument("simplex point with negative coordinate");
}

SimplexPoint::SimplexPoint(std::initializer_list<int> c) : SimplexPoint(std::vector<int>(c)) {}

int SimplexPoint::total() const {
    return std::accumulate(coords.begin(), coords.end(), 0);
}

std::string SimplexPoint::key() const {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    return out;
}

std::optional<SimplexPoint> point_minus(const SimplexPoint& n, const SimplexPoint& e) {
    if (n.q() != e.q()) return std::nullopt;
    std::vector<int> out(n.coords);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] -= e.coords[i];
        if (out[i] < 0) return std::nullopt;
    }
    return SimplexPoint(std::move(out));
}

std::optional<SimplexPoint> point_shift(const SimplexPoint& n, const SimplexPoint& e,
                                        const SimplexPoint& f) {
    if (n.q() != e.q() || n.q() != f.q()) return std::nullopt;
    std::vector<int> out(n.coords);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += f.coords[i] - e.coords[i];
        if (out[i] < 0) return std::nullopt;
    }
    return SimplexPoint(std::move(out));
}

std::vector<SimplexPoint> enumerate_simplex(int q, int N) {
    if (q < 1) throw std::invalid_argument("enumerate_simplex: q must be >= 1");
    if (N < 0) throw std::invalid_argument("enumerate_simplex: N must be >= 0");
    std::vector<SimplexPoint> out;
    std::vector<int> cur(static_cast<size_t>(q), 0);
    // Recursive lexicographic fill: coordinate i runs 0..remaining.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == q - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, N);
    return out;
}

Int binomial(const Int& n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Int multinomial(int N, std::span<const int> n) {
    long long sum = 0;
    for (int v : n) {
        if (v < 0) return 0;
        sum += v;
    }
    if (sum != N) return 0;
    // Product of nested binomials: C(n0, n0) C(n0+n1, n1) ...
    Int out = 1;
    Int partial = 0;
    for (int v : n) {
        partial += v;
        out *= binomial(partial, v);
    }
    return out;
}

Int multinomial(int N, const SimplexPoint& n) {
    return multinomial(N, std::span<const int>(n.coords));
}

SimplexPoint composition(std::string_view word, int q) {
    if (q < 1) throw std::invalid_argument("composition: q must be >= 1");
    std::vector<int> counts(static_cast<size_t>(q), 0);
    for (char ch : word) {
        int sym = ch - '0';
        if (ch < '0' || ch > '9' || sym >= q)
            throw std::invalid_argument(std::string("composition: symbol '") + ch +
                                        "' outside alphabet {0.." + std::to_string(q - 1) + "}");
        ++counts[static_cast<size_t>(sym)];
    }
    return SimplexPoint(std::move(counts));
}

int d1(const SimplexPoint& x, const SimplexPoint& y) {
    if (x.q() != y.q() || x.total() != y.total())
        throw std::invalid_argument("d1: points with mismatched shape");
    int sum = 0;
    for (int i = 0; i < x.q(); ++i) sum += std::abs(x[i] - y[i]);
    return sum / 2;  // always even on constant-sum tuples
}

Rational generalized_binomial(const Rational& top, int k) {
    if (k < 0) throw std::invalid_argument("generalized_binomial: k must be >= 0");
    Rational out(1);
    Rational factor = top;
    for (int i = 0; i < k; ++i) {
        out *= factor;
        factor -= 1;
    }
    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    out /= Rational(kfact);
    return out;
}

bool vandermonde_identity_check(int N, int t, const SimplexPoint& n) {
    if (t < 0 || t > N) throw std::invalid_argument("vandermonde_identity_check: need 0 <= t <= N");
    if (n.total() != N) throw std::invalid_argument("vandermonde_identity_check: n not in S_{q,N}");
    const int q = n.q();
    const Int cNn = multinomial(N, n);
    const Int cNt = binomial(Int(N), t);
    Int convolution = 0;
    for (const SimplexPoint& e : enumerate_simplex(q, t)) {
        const Int cte = multinomial(t, e);
        std::vector<int> diff(n.coords);
        for (int i = 0; i < q; ++i) diff[static_cast<size_t>(i)] -= e[i];
        const Int rest = multinomial(N - t, diff);
        convolution += cte * rest;

        // Per-e form: prod_i C(n_i, e_i) / C(N,t) == C(t,e) C(N-t,n-e) / C(N,n).
        Int prod = 1;
        for (int i = 0; i < q; ++i) prod *= binomial(Int(n[i]), e[i]);
        if (prod * cNn != cte * rest * cNt) return false;
    }
    return convolution == cNn;
}

SimplexBasis::SimplexBasis(int q, int N) : q_(q), N_(N), points_(enumerate_simplex(q, N)) {}

int SimplexBasis::index_of(const SimplexPoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - points_.begin());
}

}  // namespace simplexcodes
