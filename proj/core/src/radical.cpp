#include "simplexcodes/radical.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace simplexcodes {

namespace {

// Pollard-Brent rho; n must be composite, odd, > 1 and not a perfect power
// of a small prime (trial division has already run). Returns a nontrivial factor.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, d = 1;
        Int ys = y, q = 1;
        const long m = 128;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                Int diff = (x > ys) ? x - ys : ys - x;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& value, std::map<Int, unsigned long>& factors) {
    Int n = value;
    if (n <= 1) return;
    // Trial division first: kernels here come from binomial coefficients and
    // code weights, so small primes dominate.
    for (long p = 2; p < 1000 && n > 1; p == 2 ? p = 3 : p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++factors[Int(p)];
            n /= static_cast<unsigned long>(p);
        }
        Int psq = Int(p) * p;
        if (psq > n) break;
    }
    std::vector<Int> pending{n};
    while (!pending.empty()) {
        Int cur = pending.back();
        pending.pop_back();
        if (cur <= 1) continue;
        if (mpz_probab_prime_p(cur.get_mpz_t(), 32) != 0) {
            ++factors[cur];
            continue;
        }
        if (mpz_perfect_square_p(cur.get_mpz_t())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), cur.get_mpz_t());
            std::map<Int, unsigned long> sub;
            factor_into(root, sub);
            for (auto& [p, e] : sub) factors[p] += 2 * e;
            continue;
        }
        Int d = pollard_rho(cur);
        pending.push_back(d);
        pending.push_back(cur / d);
    }
}

}  // namespace

Int squarefree_decompose(const Int& n, Int& square_part) {
    if (n < 1) throw std::invalid_argument("squarefree_decompose: argument must be positive");
    std::map<Int, unsigned long> factors;
    factor_into(n, factors);
    Int squarefree = 1;
    square_part = 1;
    for (const auto& [p, e] : factors) {
        if (e % 2 == 1) squarefree *= p;
        for (unsigned long i = 0; i < e / 2; ++i) square_part *= p;
    }
    return squarefree;
}

SqrtRational::SqrtRational(int s, Rational rad) : sign(s), radicand(std::move(rad)) {
    if (sign < -1 || sign > 1) throw std::invalid_argument("SqrtRational: sign must be -1, 0, +1");
    if (radicand < 0) throw std::invalid_argument("SqrtRational: radicand must be >= 0");
    if ((sign == 0) != (radicand == 0))
        throw std::invalid_argument("SqrtRational: sign is 0 iff radicand is 0");
}

SqrtRational SqrtRational::sqrt_of(const Rational& r) {
    if (r < 0) throw std::invalid_argument("SqrtRational::sqrt_of: negative radicand");
    if (r == 0) return SqrtRational();
    return SqrtRational(1, r);
}

SqrtRational SqrtRational::of_rational(const Rational& r) {
    if (r == 0) return SqrtRational();
    return SqrtRational(r > 0 ? 1 : -1, r * r);
}

double SqrtRational::to_double() const {
    return sign * std::sqrt(radicand.get_d());
}

SqrtRational SqrtRational::operator*(const SqrtRational& other) const {
    if (sign == 0 || other.sign == 0) return SqrtRational();
    return SqrtRational(sign * other.sign, radicand * other.radicand);
}

SqrtRational SqrtRational::operator-() const {
    if (sign == 0) return SqrtRational();
    return SqrtRational(-sign, radicand);
}

std::string SqrtRational::to_string() const {
    if (sign == 0) return "0";
    return std::string(sign < 0 ? "-" : "") + "sqrt(" + rational_to_string(radicand) + ")";
}

void RadicalSum::add(const SqrtRational& term) {
    if (term.is_zero()) return;
    // sign * sqrt(a/b) = sign * (s/b) * sqrt(m) with a*b = s^2 * m, m squarefree.
    const Int a = term.radicand.get_num();
    const Int b = term.radicand.get_den();
    Int square_part;
    const Int kernel = squarefree_decompose(a * b, square_part);
    Rational coeff = make_rational(term.sign * square_part, b);
    auto it = terms_.find(kernel);
    if (it == terms_.end()) {
        terms_.emplace(kernel, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
    for (const auto& [kernel, coeff] : other.terms_) {
        auto it = terms_.find(kernel);
        if (it == terms_.end()) {
            terms_.emplace(kernel, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
    for (const auto& [kernel, coeff] : other.terms_) {
        auto it = terms_.find(kernel);
        if (it == terms_.end()) {
            terms_.emplace(kernel, -coeff);
        } else {
            it->second -= coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

double RadicalSum::estimate() const {
    double out = 0.0;
    for (const auto& [kernel, coeff] : terms_)
        out += coeff.get_d() * std::sqrt(kernel.get_d());
    return out;
}

std::string RadicalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [kernel, coeff] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += rational_to_string(coeff);
        if (kernel != 1) out += "*sqrt(" + kernel.get_str() + ")";
    }
    return out;
}

}  // namespace simplexcodes
