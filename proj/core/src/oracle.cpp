#include "simplexcodes/oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace simplexcodes {

namespace {

using Complex = std::complex<double>;
using MapState = std::map<SimplexPoint, Complex>;

constexpr long long kDenseGuard = 1000000;

long long dense_dimension(int q, int N) {
    long long dim = 1;
    for (int i = 0; i < N; ++i) {
        dim *= q;
        if (dim > kDenseGuard) throw std::invalid_argument("dense oracle guard exceeded: q^N > 10^6");
    }
    return dim;
}

// Composition of the base-q string encoded by idx (first qudit most
// significant), written into counts.
void composition_of_index(long long idx, int q, int N, std::vector<int>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int pos = 0; pos < N; ++pos) {
        ++counts[static_cast<size_t>(idx % q)];
        idx /= q;
    }
}

// Contract qudit `pos` (0-based) of an N-qudit dense vector with <type|.
DenseState apply_single_deletion(const DenseState& v, int q, int N, int pos, int type) {
    long long stride = 1;
    for (int i = 0; i < N - 1 - pos; ++i) stride *= q;
    const long long block = stride * q;
    DenseState out = DenseState::Zero(v.size() / q);
    for (long long idx = 0; idx < v.size(); ++idx) {
        const int digit = static_cast<int>((idx % block) / stride);
        if (digit != type) continue;
        const long long reduced = (idx / block) * stride + (idx % stride);
        out[reduced] += v[idx];
    }
    return out;
}

MapState logical_map_state(const SimplexCode& code, int i) {
    MapState out;
    for (const auto& [point, amp] : code.logical(i)) out[point] = amp.to_double();
    return out;
}

// Multi-mode damping operator applied to a map-state, mode by mode, using
// the entries of the single-mode Kraus matrices.
MapState apply_ad_error(const MapState& state, const SimplexPoint& e,
                        const std::vector<OperatorMatrix>& kraus_by_loss) {
    MapState out;
    for (const auto& [point, amp] : state) {
        Complex value = amp;
        std::vector<int> coords(point.coords);
        bool alive = true;
        for (int mode = 0; mode < point.q(); ++mode) {
            const int x = e[mode];
            const int j = point[mode];
            if (j < x) {
                alive = false;
                break;
            }
            value *= kraus_by_loss[static_cast<size_t>(x)](j - x, j);
            coords[static_cast<size_t>(mode)] -= x;
        }
        if (!alive || value == Complex(0)) continue;
        out[SimplexPoint(std::move(coords))] += value;
    }
    return out;
}

Complex map_inner(const MapState& a, const MapState& b) {
    Complex out(0);
    const MapState& small = a.size() <= b.size() ? a : b;
    const MapState& large = a.size() <= b.size() ? b : a;
    for (const auto& [point, value] : small) {
        auto it = large.find(point);
        if (it == large.end()) continue;
        out += (&small == &a) ? std::conj(value) * it->second : std::conj(it->second) * value;
    }
    return out;
}

double map_norm_squared(const MapState& a) {
    double out = 0.0;
    for (const auto& [point, value] : a) out += std::norm(value);
    return out;
}

// Deterministic standard normals (Box-Muller over the raw generator bits);
// avoids the implementation-defined std::normal_distribution sequences.
struct Gaussian {
    uint64_t state;
    explicit Gaussian(uint64_t seed) : state(seed ? seed : 1) {}
    double uniform() {
        // xorshift64*
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        const uint64_t bits = state * 0x2545F4914F6CDD1Dull;
        return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }
    double operator()() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
};

std::vector<SimplexPoint> ad_error_list(int q, int max_loss, int min_loss) {
    std::vector<SimplexPoint> out;
    for (int r = min_loss; r <= max_loss; ++r)
        for (SimplexPoint& e : enumerate_simplex(q, r)) out.push_back(std::move(e));
    return out;
}

}  // namespace

DenseState dicke_expand(const SimplexPoint& n) {
    const int q = n.q();
    const int N = n.total();
    const long long dim = dense_dimension(q, N);
    DenseState out = DenseState::Zero(dim);
    const double amp = 1.0 / std::sqrt(multinomial(N, n).get_d());
    std::vector<int> counts(static_cast<size_t>(q));
    for (long long idx = 0; idx < dim; ++idx) {
        composition_of_index(idx, q, N, counts);
        if (std::equal(counts.begin(), counts.end(), n.coords.begin())) out[idx] = amp;
    }
    return out;
}

double deletion_oracle_check(const SimplexPoint& n, const SimplexPoint& e, bool reverse_order) {
    const int q = n.q();
    const int N = n.total();
    const int t = e.total();
    if (e.q() != q) throw std::invalid_argument("deletion_oracle_check: mismatched shapes");
    if (t > N) throw std::invalid_argument("deletion_oracle_check: more deletions than qudits");

    DenseState state = dicke_expand(n);
    int remaining = N;
    if (!reverse_order) {
        for (int j = 0; j < q; ++j)
            for (int rep = 0; rep < e[j]; ++rep)
                state = apply_single_deletion(state, q, remaining--, 0, j);
    } else {
        for (int j = q - 1; j >= 0; --j)
            for (int rep = 0; rep < e[j]; ++rep) {
                state = apply_single_deletion(state, q, remaining, remaining - 1, j);
                --remaining;
            }
    }

    const auto target = point_minus(n, e);
    DenseState closed = DenseState::Zero(state.size());
    if (target) {
        const double coeff =
            std::sqrt(multinomial(N - t, *target).get_d() / multinomial(N, n).get_d());
        closed = coeff * dicke_expand(*target);
    }
    return (state - closed).cwiseAbs().maxCoeff();
}

OperatorMatrix ad_kraus(int n_max, int x, double gamma) {
    if (x < 0 || x > n_max) throw std::invalid_argument("ad_kraus: need 0 <= x <= n_max");
    OperatorMatrix out = OperatorMatrix::Zero(n_max + 1, n_max + 1);
    for (int j = x; j <= n_max; ++j) {
        const double magnitude =
            std::sqrt(std::pow(1.0 - gamma, j - x) * std::pow(gamma, x) * binomial(Int(j), x).get_d());
        out(j - x, j) = magnitude;
    }
    return out;
}

GramTable build_ad_gram_table(const SimplexCode& code, int t, double gamma) {
    if (code.space != SpaceTag::Fock)
        throw std::invalid_argument("build_ad_gram_table: code must be Fock-tagged");
    GramTable table;
    table.errors = ad_error_list(code.q, t, 0);
    table.K = code.K;

    std::vector<OperatorMatrix> kraus_by_loss;
    for (int x = 0; x <= code.N; ++x) kraus_by_loss.push_back(ad_kraus(code.N, x, gamma));

    // damped[a][i] = A_{e_a} |c_i>
    std::vector<std::vector<MapState>> damped;
    for (const SimplexPoint& e : table.errors) {
        std::vector<MapState> row;
        for (int i = 0; i < code.K; ++i)
            row.push_back(apply_ad_error(logical_map_state(code, i), e, kraus_by_loss));
        damped.push_back(std::move(row));
    }

    const size_t n_errors = table.errors.size();
    table.blocks.resize(n_errors * n_errors);
    for (size_t a = 0; a < n_errors; ++a)
        for (size_t b = 0; b < n_errors; ++b) {
            OperatorMatrix block = OperatorMatrix::Zero(code.K, code.K);
            for (int i = 0; i < code.K; ++i)
                for (int j = 0; j < code.K; ++j)
                    block(i, j) = map_inner(damped[a][static_cast<size_t>(i)],
                                            damped[b][static_cast<size_t>(j)]);
            table.blocks[a * n_errors + b] = std::move(block);
        }
    return table;
}

GramVerdict ad_kl_gram(const SimplexCode& code, int t, const std::vector<double>& gammas,
                       double tolerance) {
    GramVerdict verdict;
    verdict.tolerance = tolerance;
    for (double gamma : gammas) {
        const GramTable table = build_ad_gram_table(code, t, gamma);
        const size_t n_errors = table.errors.size();
        for (size_t a = 0; a < n_errors; ++a)
            for (size_t b = 0; b < n_errors; ++b) {
                const OperatorMatrix& block = table.block(a, b);
                for (int i = 0; i < code.K; ++i)
                    for (int j = 0; j < code.K; ++j) {
                        if (i != j)
                            verdict.worst_orthogonality =
                                std::max(verdict.worst_orthogonality, std::abs(block(i, j)));
                        else
                            verdict.worst_deformation = std::max(
                                verdict.worst_deformation, std::abs(block(i, i) - block(0, 0)));
                    }
            }
    }
    verdict.passed = verdict.worst_orthogonality <= tolerance &&
                     verdict.worst_deformation <= tolerance;
    return verdict;
}

double fidelity_at(const SimplexCode& code, int t, double gamma) {
    if (code.space != SpaceTag::Fock)
        throw std::invalid_argument("fidelity_at: code must be Fock-tagged");
    std::vector<OperatorMatrix> kraus_by_loss;
    for (int x = 0; x <= code.N; ++x) kraus_by_loss.push_back(ad_kraus(code.N, x, gamma));
    const auto tail_errors = ad_error_list(code.q, code.N, t + 1);
    double worst = 0.0;
    for (int i = 0; i < code.K; ++i) {
        const MapState psi = logical_map_state(code, i);
        double deficit = 0.0;
        for (const SimplexPoint& e : tail_errors)
            deficit += map_norm_squared(apply_ad_error(psi, e, kraus_by_loss));
        worst = std::max(worst, deficit);
    }
    return 1.0 - worst;
}

FidelityFit fidelity_series(const SimplexCode& code, int t, std::vector<double> gammas,
                            uint64_t seed) {
    if (code.space != SpaceTag::Fock)
        throw std::invalid_argument("fidelity_series: code must be Fock-tagged");
    if (gammas.size() < 2) throw std::invalid_argument("fidelity_series: need >= 2 rates");

    // Sampled inputs: the K logical basis states plus seeded superpositions.
    std::vector<MapState> states;
    for (int i = 0; i < code.K; ++i) states.push_back(logical_map_state(code, i));
    Gaussian gauss(seed);
    for (int s = 0; s < 32; ++s) {
        std::vector<Complex> coeff(static_cast<size_t>(code.K));
        double norm = 0.0;
        for (auto& c : coeff) {
            c = Complex(gauss(), gauss());
            norm += std::norm(c);
        }
        MapState psi;
        for (int i = 0; i < code.K; ++i)
            for (const auto& [point, amp] : code.logical(i))
                psi[point] += coeff[static_cast<size_t>(i)] / std::sqrt(norm) * amp.to_double();
        states.push_back(std::move(psi));
    }

    // 1 - sum_{|e| <= t} <A^dag A> equals the weight the channel pushes past
    // t losses, so the infidelity is accumulated directly from those terms.
    const auto tail_errors = ad_error_list(code.q, code.N, t + 1);
    FidelityFit fit;
    fit.gammas = gammas;
    fit.expected_leading_coefficient = binomial(Int(code.N), t + 1).get_d();

    std::vector<double> deflated;
    for (double gamma : gammas) {
        std::vector<OperatorMatrix> kraus_by_loss;
        for (int x = 0; x <= code.N; ++x) kraus_by_loss.push_back(ad_kraus(code.N, x, gamma));
        double worst = 0.0, best = 1.0;
        for (const MapState& psi : states) {
            double deficit = 0.0;
            for (const SimplexPoint& e : tail_errors)
                deficit += map_norm_squared(apply_ad_error(psi, e, kraus_by_loss));
            worst = std::max(worst, deficit);
            best = std::min(best, deficit);
        }
        if (worst > 0) fit.state_dependence = std::max(fit.state_dependence, (worst - best) / worst);
        deflated.push_back(worst / std::pow(gamma, t + 1));
    }

    // Least-squares line through (gamma_k, deflated_k); the intercept is the
    // leading coefficient with the next-order term cancelled.
    const size_t k = gammas.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < k; ++i) {
        sx += gammas[i];
        sy += deflated[i];
        sxx += gammas[i] * gammas[i];
        sxy += gammas[i] * deflated[i];
    }
    const double denom = static_cast<double>(k) * sxx - sx * sx;
    fit.fitted_leading_coefficient = (sy * sxx - sx * sxy) / denom;
    return fit;
}

std::vector<OperatorMatrix> su_generators(int q) {
    if (q < 2) throw std::invalid_argument("su_generators: q must be >= 2");
    std::vector<OperatorMatrix> out;
    for (int j = 0; j < q; ++j)
        for (int k = j + 1; k < q; ++k) {
            OperatorMatrix m = OperatorMatrix::Zero(q, q);
            m(j, k) = 1;
            m(k, j) = 1;
            out.push_back(m);
        }
    for (int j = 0; j < q; ++j)
        for (int k = j + 1; k < q; ++k) {
            OperatorMatrix m = OperatorMatrix::Zero(q, q);
            m(j, k) = Complex(0, -1);
            m(k, j) = Complex(0, 1);
            out.push_back(m);
        }
    for (int l = 1; l < q; ++l) {
        OperatorMatrix m = OperatorMatrix::Zero(q, q);
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int mm = 0; mm < l; ++mm) m(mm, mm) = scale;
        m(l, l) = -scale * l;
        out.push_back(m);
    }
    return out;
}

namespace {

OperatorMatrix js_image(const OperatorMatrix& j, const SimplexBasis& basis) {
    const int q = basis.q();
    OperatorMatrix out = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const SimplexPoint& n = basis.point(col);
        for (int jj = 0; jj < q; ++jj) {
            if (j(jj, jj) != Complex(0)) out(col, col) += j(jj, jj) * static_cast<double>(n[jj]);
        }
        for (int ja = 0; ja < q; ++ja)
            for (int kb = 0; kb < q; ++kb) {
                if (ja == kb || j(ja, kb) == Complex(0) || n[kb] == 0) continue;
                std::vector<int> target(n.coords);
                --target[static_cast<size_t>(kb)];
                ++target[static_cast<size_t>(ja)];
                const int row = basis.index_of(SimplexPoint(target));
                out(row, col) += j(ja, kb) * std::sqrt(static_cast<double>(n[kb]) * (n[ja] + 1));
            }
    }
    return out;
}

SimplexBasis guarded_basis(int q, int N) {
    if (q > 4) throw std::invalid_argument("js_generators: guarded to q <= 4");
    SimplexBasis basis(q, N);
    if (basis.size() > 5000) throw std::invalid_argument("js_generators: block larger than 5000");
    return basis;
}

}  // namespace

std::vector<OperatorMatrix> js_generators(int q, int N) {
    const SimplexBasis basis = guarded_basis(q, N);
    std::vector<OperatorMatrix> out;
    for (const OperatorMatrix& j : su_generators(q)) out.push_back(js_image(j, basis));
    return out;
}

OperatorMatrix js_total_excitation(int q, int N) {
    const SimplexBasis basis = guarded_basis(q, N);
    return js_image(OperatorMatrix::Identity(q, q), basis);
}

OperatorMatrix global_qudit_action(const OperatorMatrix& j, int q, int N) {
    const long long dim = dense_dimension(q, N);
    const SimplexBasis basis(q, N);
    OperatorMatrix out = OperatorMatrix::Zero(basis.size(), basis.size());
    std::vector<int> counts(static_cast<size_t>(q));
    for (int col = 0; col < basis.size(); ++col) {
        const DenseState v = dicke_expand(basis.point(col));
        DenseState w = DenseState::Zero(dim);
        long long stride = dim / q;
        for (int pos = 0; pos < N; ++pos) {
            const long long block = stride * q;
            for (long long idx = 0; idx < dim; ++idx) {
                if (v[idx] == Complex(0)) continue;
                const int digit = static_cast<int>((idx % block) / stride);
                const long long base = idx - static_cast<long long>(digit) * stride;
                for (int d = 0; d < q; ++d)
                    if (j(d, digit) != Complex(0)) w[base + static_cast<long long>(d) * stride] += j(d, digit) * v[idx];
            }
            stride /= q;
        }
        // Project onto the Dicke basis in one pass over the strings.
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(basis.size());
        for (long long idx = 0; idx < dim; ++idx) {
            if (w[idx] == Complex(0)) continue;
            composition_of_index(idx, q, N, counts);
            acc[basis.index_of(SimplexPoint(counts))] += w[idx];
        }
        for (int row = 0; row < basis.size(); ++row)
            out(row, col) = acc[row] / std::sqrt(multinomial(N, basis.point(row)).get_d());
    }
    return out;
}

bool spin_kl_check(const SimplexCode& code, int t, double tolerance) {
    if (code.space != SpaceTag::Spin)
        throw std::invalid_argument("spin_kl_check: code must be Spin-tagged");
    const SimplexBasis basis(code.q, code.N);
    const auto generators = js_generators(code.q, code.N);

    std::vector<DenseState> logical;
    for (int i = 0; i < code.K; ++i) {
        DenseState v = DenseState::Zero(basis.size());
        for (const auto& [point, amp] : code.logical(i)) v[basis.index_of(point)] = amp.to_double();
        logical.push_back(std::move(v));
    }

    // Walk all generator products of length 1..t, checking the detection
    // condition <c_i|P|c_j> = lambda_P delta_ij at every node.
    auto check_current = [&](const std::vector<DenseState>& transformed) {
        Complex lambda(0);
        for (int i = 0; i < code.K; ++i)
            for (int j = 0; j < code.K; ++j) {
                const Complex value = logical[static_cast<size_t>(i)].dot(transformed[static_cast<size_t>(j)]);
                if (i != j) {
                    if (std::abs(value) > tolerance) return false;
                } else if (i == 0) {
                    lambda = value;
                } else if (std::abs(value - lambda) > tolerance) {
                    return false;
                }
            }
        return true;
    };

    auto rec = [&](auto&& self, const std::vector<DenseState>& current, int depth) -> bool {
        if (depth >= 1 && !check_current(current)) return false;
        if (depth == t) return true;
        for (const OperatorMatrix& g : generators) {
            std::vector<DenseState> next;
            next.reserve(current.size());
            for (const DenseState& v : current) next.push_back(g * v);
            if (!self(self, next, depth + 1)) return false;
        }
        return true;
    };
    return rec(rec, logical, 0);
}

OperatorMatrix sym_induced_action(const OperatorMatrix& g, int q, int N) {
    if (g.rows() != q || g.cols() != q)
        throw std::invalid_argument("sym_induced_action: matrix shape mismatch");
    const SimplexBasis basis(q, N);
    OperatorMatrix out = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const SimplexPoint& n = basis.point(col);
        // Expand prod_j (sum_k g_{kj} z_k)^{n_j} over monomial exponents.
        std::map<std::vector<int>, Complex> poly{{std::vector<int>(static_cast<size_t>(q), 0), Complex(1)}};
        for (int mode = 0; mode < q; ++mode) {
            for (int rep = 0; rep < n[mode]; ++rep) {
                std::map<std::vector<int>, Complex> next;
                for (const auto& [expo, c] : poly)
                    for (int k = 0; k < q; ++k) {
                        if (g(k, mode) == Complex(0)) continue;
                        std::vector<int> bumped(expo);
                        ++bumped[static_cast<size_t>(k)];
                        next[bumped] += c * g(k, mode);
                    }
                poly = std::move(next);
            }
        }
        const double mult_n = multinomial(N, n).get_d();
        for (const auto& [expo, c] : poly) {
            const int row = basis.index_of(SimplexPoint(expo));
            out(row, col) = c * std::sqrt(mult_n / multinomial(N, SimplexPoint(expo)).get_d());
        }
    }
    return out;
}

namespace {

OperatorMatrix phase_normalized(const OperatorMatrix& u) {
    // Rotate by the phase of the largest-magnitude entry (first such in a
    // row-major scan), making it real positive.
    double best = 0.0;
    Complex pivot(1, 0);
    for (int r = 0; r < u.rows(); ++r)
        for (int c = 0; c < u.cols(); ++c)
            if (std::abs(u(r, c)) > best + 1e-12) {
                best = std::abs(u(r, c));
                pivot = u(r, c);
            }
    if (best == 0.0) return u;
    return u * (std::conj(pivot) / std::abs(pivot));
}

}  // namespace

int projective_group_order(const std::vector<OperatorMatrix>& generators, double tolerance,
                           int max_order) {
    std::vector<OperatorMatrix> elements;
    auto find_or_add = [&](const OperatorMatrix& candidate) -> bool {
        const OperatorMatrix normalized = phase_normalized(candidate);
        for (const OperatorMatrix& known : elements)
            if ((known - normalized).cwiseAbs().maxCoeff() <= tolerance) return false;
        elements.push_back(normalized);
        return true;
    };
    if (generators.empty()) return 0;
    find_or_add(OperatorMatrix::Identity(generators[0].rows(), generators[0].cols()));
    for (const OperatorMatrix& g : generators) find_or_add(g);
    size_t frontier = 0;
    while (frontier < elements.size()) {
        if (static_cast<int>(elements.size()) > max_order) return -1;
        const OperatorMatrix current = elements[frontier++];
        for (const OperatorMatrix& g : generators) {
            find_or_add(current * g);
            find_or_add(g * current);
        }
    }
    return static_cast<int>(elements.size());
}

double unitarity_defect(const OperatorMatrix& u) {
    const OperatorMatrix gram = u.adjoint() * u;
    return (gram - OperatorMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

CovarianceResult covariance_check(const SimplexCode& code, const OperatorMatrix& g,
                                  double tolerance) {
    const SimplexBasis basis(code.q, code.N);
    const OperatorMatrix u = sym_induced_action(g, code.q, code.N);

    std::vector<DenseState> logical;
    for (int i = 0; i < code.K; ++i) {
        DenseState v = DenseState::Zero(basis.size());
        for (const auto& [point, amp] : code.logical(i)) v[basis.index_of(point)] = amp.to_double();
        logical.push_back(std::move(v));
    }

    CovarianceResult result;
    result.logical = OperatorMatrix::Zero(code.K, code.K);
    double residual = 0.0;
    for (int j = 0; j < code.K; ++j) {
        const DenseState w = u * logical[static_cast<size_t>(j)];
        DenseState projected = DenseState::Zero(basis.size());
        for (int i = 0; i < code.K; ++i) {
            const Complex overlap = logical[static_cast<size_t>(i)].dot(w);
            result.logical(i, j) = overlap;
            projected += overlap * logical[static_cast<size_t>(i)];
        }
        residual = std::max(residual, (w - projected).norm());
    }
    result.invariance_residual = residual;
    result.invariant = residual <= tolerance;
    return result;
}

}  // namespace simplexcodes
