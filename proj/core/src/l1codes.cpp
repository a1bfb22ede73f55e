#include "simplexcodes/l1codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace simplexcodes {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Arithmetic in Z_p[x] / (modulus), elements as coefficient vectors of
// degree < deg(modulus), encoded as base-p integers for table lookups.
struct PolyField {
    int p;
    int deg;
    std::vector<int> modulus;  // monic, size deg+1

    std::vector<int> mul_by_x(const std::vector<int>& a) const {
        std::vector<int> out(static_cast<size_t>(deg), 0);
        for (int i = 0; i < deg - 1; ++i) out[static_cast<size_t>(i + 1)] = a[static_cast<size_t>(i)];
        const int lead = a[static_cast<size_t>(deg - 1)];
        if (lead != 0) {
            for (int i = 0; i < deg; ++i) {
                out[static_cast<size_t>(i)] =
                    (out[static_cast<size_t>(i)] + (p - modulus[static_cast<size_t>(i)]) * lead) % p;
            }
        }
        return out;
    }

    long long encode(const std::vector<int>& a) const {
        long long code = 0;
        for (int i = deg - 1; i >= 0; --i) code = code * p + a[static_cast<size_t>(i)];
        return code;
    }
};

}  // namespace

void L1Code::canonicalize() {
    for (const SimplexPoint& pt : points) {
        if (pt.q() != q || pt.total() != N)
            throw std::invalid_argument("L1Code: point outside S_{q,N}");
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("L1Code: duplicate points");
}

int min_distance(L1Code& code) {
    if (code.size() < 2) throw std::invalid_argument("min_distance: need at least 2 points");
    int best = code.N + 1;
    for (size_t i = 0; i < code.points.size(); ++i)
        for (size_t j = i + 1; j < code.points.size(); ++j)
            best = std::min(best, d1(code.points[i], code.points[j]));
    code.certified_distance = best;
    return best;
}

L1Code scaled_simplex_code(int K, int t) {
    if (K < 2 || t < 2) throw std::invalid_argument("scaled_simplex_code: K and t must be >= 2");
    const int q = (K - 1) * t * (t + 1);
    L1Code code;
    code.q = q;
    code.N = q;
    for (const SimplexPoint& s : enumerate_simplex(q, (K - 1) * t)) {
        std::vector<int> scaled(s.coords);
        for (int& v : scaled) v *= (t + 1);
        code.points.emplace_back(std::move(scaled));
    }
    code.points.emplace_back(std::vector<int>(static_cast<size_t>(q), 1));
    code.canonicalize();
    min_distance(code);
    if (*code.certified_distance < t + 1)
        throw std::logic_error("scaled_simplex_code: distance below t+1");
    return code;
}

bool verify_sidon(const SidonSet& s) {
    if (s.modulus < 1 || s.order < 1) return false;
    const int n = s.size();
    for (long long v : s.elements)
        if (v < 0 || v >= s.modulus) return false;
    // All sums of `order` elements with nondecreasing indices must be distinct.
    std::set<long long> sums;
    std::vector<int> idx(static_cast<size_t>(s.order), 0);
    while (true) {
        long long sum = 0;
        for (int i : idx) sum += s.elements[static_cast<size_t>(i)];
        if (!sums.insert(sum % s.modulus).second) return false;
        int pos = s.order - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int next = idx[static_cast<size_t>(pos)] + 1;
        for (int i = pos; i < s.order; ++i) idx[static_cast<size_t>(i)] = next;
    }
    return true;
}

SidonSet bose_chowla(int p, int t) {
    if (!is_prime(p)) throw std::invalid_argument("bose_chowla: p must be prime");
    if (t < 2) throw std::invalid_argument("bose_chowla: t must be >= 2");
    const int deg = t + 1;
    const long long field_size = ipow(p, deg);
    if (field_size > (1LL << 24))
        throw std::invalid_argument("bose_chowla: field size exceeds 2^24");
    const long long group_order = field_size - 1;
    const long long m = group_order / (p - 1);

    // Candidate moduli x^deg + c_{deg-1} x^{deg-1} + ... + c_0 with c_0 != 0,
    // in ascending base-p coefficient order. The log-table walk doubles as the
    // primitivity test: x has order p^deg - 1 iff the walk first returns to 1
    // after exactly that many steps.
    for (long long cand = 0; cand < field_size; ++cand) {
        std::vector<int> modulus(static_cast<size_t>(deg + 1), 0);
        long long rem = cand;
        for (int i = 0; i < deg; ++i) {
            modulus[static_cast<size_t>(i)] = static_cast<int>(rem % p);
            rem /= p;
        }
        modulus[static_cast<size_t>(deg)] = 1;
        if (modulus[0] == 0) continue;

        PolyField field{p, deg, modulus};
        std::vector<int32_t> log_table(static_cast<size_t>(field_size), -1);
        std::vector<int> cur(static_cast<size_t>(deg), 0);
        cur[0] = 1;  // the element 1
        bool primitive = true;
        for (long long k = 0; k < group_order; ++k) {
            const long long code = field.encode(cur);
            if (log_table[static_cast<size_t>(code)] != -1) {
                primitive = false;  // cycled early: x is not a generator
                break;
            }
            log_table[static_cast<size_t>(code)] = static_cast<int32_t>(k);
            cur = field.mul_by_x(cur);
        }
        if (!primitive || field.encode(cur) != 1) continue;

        SidonSet out;
        out.modulus = m;
        out.order = t;
        out.elements.push_back(0);
        for (int a = 0; a < p; ++a) {
            // log of (x + a)
            std::vector<int> xa(static_cast<size_t>(deg), 0);
            xa[0] = a;
            xa[1] = 1;
            const long long lg = log_table[static_cast<size_t>(field.encode(xa))];
            out.elements.push_back(lg % m);
        }
        std::sort(out.elements.begin(), out.elements.end());
        if (std::adjacent_find(out.elements.begin(), out.elements.end()) != out.elements.end())
            continue;  // retry with the next modulus
        if (!verify_sidon(out)) continue;
        return out;
    }
    throw std::logic_error("bose_chowla: no primitive polynomial produced a verified set");
}

L1Code coset_codes(const SidonSet& sidon, int q, int N) {
    if (sidon.size() < q) throw std::invalid_argument("coset_codes: Sidon set smaller than q");
    const long long m = sidon.modulus;
    std::vector<std::vector<SimplexPoint>> cosets(static_cast<size_t>(m));
    for (SimplexPoint& x : enumerate_simplex(q, N)) {
        long long syndrome = 0;
        for (int i = 0; i < q; ++i) syndrome += static_cast<long long>(x[i]) * sidon.elements[static_cast<size_t>(i)];
        cosets[static_cast<size_t>(syndrome % m)].push_back(std::move(x));
    }
    size_t best = 0;
    for (size_t g = 1; g < cosets.size(); ++g)
        if (cosets[g].size() > cosets[best].size()) best = g;  // ties keep the smaller g

    L1Code code;
    code.q = q;
    code.N = N;
    code.points = std::move(cosets[best]);
    code.canonicalize();
    if (code.size() >= 2) {
        min_distance(code);
        if (*code.certified_distance < sidon.order + 1)
            throw std::logic_error("coset_codes: distance below t+1, Sidon input invalid");
    }
    return code;
}

bool asymptotic_bound_check(int K, int t, int N) {
    if (K < 2 || t < 1 || N < 1)
        throw std::invalid_argument("asymptotic_bound_check: need K >= 2, t >= 1, N >= 1");
    // t(1 + log2 N) + log2 K - 1 <= N  <=>  (2N)^t * K <= 2^{N+1}, exactly.
    Int lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(2 * N), static_cast<unsigned long>(t));
    lhs *= K;
    Int rhs = 1;
    rhs <<= (N + 1);
    const bool holds = lhs <= rhs;
    if (!holds) return false;

    // Desk-scale confirmation: the inequality promises a coset code in
    // S_{N,N} large enough for a K-block Tverberg partition.
    const Int simplex_size = binomial(Int(2 * N - 1), N - 1);
    if (simplex_size > 200000) return holds;  // too large to enumerate

    SidonSet sidon;
    if (t == 1) {
        sidon.modulus = N;
        sidon.order = 1;
        for (int i = 0; i < N; ++i) sidon.elements.push_back(i);
    } else {
        int p = N - 1;
        while (!is_prime(p)) ++p;  // need p+1 >= N elements
        if (ipow(p, t + 1) > (1LL << 24)) return holds;
        sidon = bose_chowla(p, t);
    }
    if (!verify_sidon(sidon)) throw std::logic_error("asymptotic_bound_check: Sidon verification failed");
    L1Code code = coset_codes(sidon, N, N);
    const Int needed = Int(K - 1) * binomial(Int(N + t - 1), N - 1) + 1;
    if (Int(code.size()) < needed)
        throw std::logic_error("asymptotic_bound_check: coset code misses the partition bound");
    return holds;
}

}  // namespace simplexcodes
