#include "linalg.hpp"

#include <stdexcept>

namespace simplexcodes::detail {

int rref(RatMatrix& m, int pivot_col_limit) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    const size_t limit = pivot_col_limit < 0 ? cols : static_cast<size_t>(pivot_col_limit);
    size_t pivot_row = 0;
    for (size_t col = 0; col < limit && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[pivot_row], m[sel]);
        const Rational inv = m[pivot_row][col];
        for (size_t c = col; c < cols; ++c) m[pivot_row][c] /= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

std::optional<std::vector<Rational>> kernel_vector(RatMatrix m, int ncols) {
    const int rank = rref(m);
    if (rank >= ncols) return std::nullopt;

    std::vector<int> pivot_col_of_row(static_cast<size_t>(rank), -1);
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < ncols; ++c) {
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                pivot_col_of_row[static_cast<size_t>(r)] = c;
                is_pivot[static_cast<size_t>(c)] = true;
                break;
            }
        }
    }
    int free_col = -1;
    for (int c = 0; c < ncols; ++c) {
        if (!is_pivot[static_cast<size_t>(c)]) {
            free_col = c;
            break;
        }
    }
    std::vector<Rational> y(static_cast<size_t>(ncols), Rational(0));
    y[static_cast<size_t>(free_col)] = 1;
    for (int r = 0; r < rank; ++r) {
        const int pc = pivot_col_of_row[static_cast<size_t>(r)];
        if (pc >= 0) y[static_cast<size_t>(pc)] = -m[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
    }
    for (auto& v : y) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : y) w = -w;
        break;
    }
    return y;
}

std::optional<std::vector<Rational>> lp_feasible_point(const RatMatrix& a,
                                                       const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lp_feasible_point: shape mismatch");
    const size_t n = a.empty() ? 0 : a[0].size();

    // Eliminate redundant rows; [A | b] with an inconsistent row means no x at all.
    RatMatrix aug(a);
    for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    const int rank = rref(aug, static_cast<int>(n));
    for (size_t r = static_cast<size_t>(rank); r < aug.size(); ++r)
        if (aug[r][n] != 0) return std::nullopt;
    aug.resize(static_cast<size_t>(rank));
    const size_t rows = aug.size();
    if (rows == 0) return std::vector<Rational>(n, Rational(0));

    // Phase-I tableau: columns [originals | artificials | rhs], artificial
    // basis. Minimize the artificial sum; feasible iff the optimum is zero.
    const size_t total = n + rows;
    RatMatrix t(rows, std::vector<Rational>(total + 1, Rational(0)));
    for (size_t r = 0; r < rows; ++r) {
        const bool flip = aug[r][n] < 0;
        for (size_t c = 0; c < n; ++c) t[r][c] = flip ? -aug[r][c] : aug[r][c];
        t[r][n + r] = 1;
        t[r][total] = flip ? -aug[r][n] : aug[r][n];
    }
    std::vector<Rational> obj(total + 1, Rational(0));
    for (size_t c = 0; c <= total; ++c) {
        Rational s(0);
        for (size_t r = 0; r < rows; ++r) s += t[r][c];
        obj[c] = -s;
    }
    for (size_t r = 0; r < rows; ++r) obj[n + r] = 0;

    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) basis[r] = n + r;

    while (true) {
        // Bland: lowest-index column with negative reduced cost enters.
        size_t enter = total;
        for (size_t c = 0; c < total; ++c) {
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == total) break;  // optimal

        // Ratio test; ties resolved toward the smallest basis index.
        size_t leave = rows;
        Rational best_ratio(0);
        for (size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            const Rational ratio = t[r][total] / t[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows)
            throw std::logic_error("lp_feasible_point: unbounded phase-I objective");

        const Rational pivot = t[leave][enter];
        for (size_t c = 0; c <= total; ++c) t[leave][c] /= pivot;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rational f = t[r][enter];
            for (size_t c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
        }
        {
            const Rational f = obj[enter];
            if (f != 0)
                for (size_t c = 0; c <= total; ++c) obj[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }

    if (obj[total] != 0) return std::nullopt;  // artificial sum > 0: infeasible

    // Drive any artificial still basic (necessarily at zero) out of the basis.
    for (size_t r = 0; r < rows; ++r) {
        if (basis[r] < n) continue;
        size_t enter = total;
        for (size_t c = 0; c < n; ++c) {
            if (t[r][c] != 0) {
                enter = c;
                break;
            }
        }
        if (enter == total)
            throw std::logic_error("lp_feasible_point: dependent row survived reduction");
        const Rational pivot = t[r][enter];
        for (size_t c = 0; c <= total; ++c) t[r][c] /= pivot;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || t[rr][enter] == 0) continue;
            const Rational f = t[rr][enter];
            for (size_t c = 0; c <= total; ++c) t[rr][c] -= f * t[r][c];
        }
        basis[r] = enter;
    }

    std::vector<Rational> x(n, Rational(0));
    for (size_t r = 0; r < rows; ++r) x[basis[r]] = t[r][total];
    return x;
}

}  // namespace simplexcodes::detail
