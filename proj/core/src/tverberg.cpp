#include "simplexcodes/tverberg.hpp"

#include <algorithm>
#include <functional>

#include "linalg.hpp"

namespace simplexcodes {

namespace {

// Constraint matrix for a partition: one row per (error coordinate, block j>=1)
// forcing block0 and block j to the same per-coordinate sum, plus one row
// normalizing block0's weight sum to 1. Columns are given by `columns`, each
// a (block, set of label indices) aggregate; per-point LPs use singletons and
// the orbit-reduced LP uses whole orbit slices.
struct AggregateColumn {
    int block;
    std::vector<int> label_indices;
};

std::optional<std::vector<Rational>> solve_partition_lp(const PointCloud& cloud,
                                                        const std::vector<AggregateColumn>& columns,
                                                        int block_count) {
    const int m = cloud.dim();
    const size_t rows = static_cast<size_t>(m) * static_cast<size_t>(block_count - 1) + 1;
    detail::RatMatrix a(rows, std::vector<Rational>(columns.size(), Rational(0)));
    std::vector<Rational> b(rows, Rational(0));
    for (size_t col = 0; col < columns.size(); ++col) {
        const auto& agg = columns[col];
        for (int e = 0; e < m; ++e) {
            Rational sum(0);
            for (int li : agg.label_indices) sum += cloud.coords[static_cast<size_t>(li)][static_cast<size_t>(e)];
            if (agg.block == 0) {
                for (int j = 1; j < block_count; ++j)
                    a[static_cast<size_t>((j - 1) * m + e)][col] = sum;
            } else {
                a[static_cast<size_t>((agg.block - 1) * m + e)][col] = -sum;
            }
        }
        if (agg.block == 0)
            a[rows - 1][col] = Rational(static_cast<long>(agg.label_indices.size()));
    }
    b[rows - 1] = 1;
    return detail::lp_feasible_point(a, b);
}

TverbergWitness witness_from_solution(const PointCloud& cloud,
                                      const std::vector<AggregateColumn>& columns,
                                      int block_count, const std::vector<Rational>& x) {
    TverbergWitness w;
    w.blocks.assign(static_cast<size_t>(block_count), {});
    for (size_t col = 0; col < columns.size(); ++col) {
        if (x[col] == 0) continue;  // zero-weight labels drop out of the witness
        for (int li : columns[col].label_indices) {
            const SimplexPoint& label = cloud.labels[static_cast<size_t>(li)];
            w.blocks[static_cast<size_t>(columns[col].block)].push_back(label);
            w.weights[label] = x[col];
        }
    }
    for (auto& block : w.blocks) std::sort(block.begin(), block.end());
    if (!w.verify(cloud))
        throw std::logic_error("find_witness: solver produced an invalid witness");
    return w;
}

// Restricted-growth strings over `items` elements with exactly `k` classes,
// in lexicographic order; invokes fn(assignment) until fn returns true.
bool for_each_partition(int items, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> a(static_cast<size_t>(items), 0);
    auto rec = [&](auto&& self, int pos, int maxv) -> bool {
        if (pos == items) return maxv == k - 1 && fn(a);
        for (int v = 0; v <= std::min(maxv + 1, k - 1); ++v) {
            a[static_cast<size_t>(pos)] = v;
            if (self(self, pos + 1, std::max(maxv, v))) return true;
        }
        return false;
    };
    if (items == 0) return false;
    return rec(rec, 1, 0);  // a[0] = 0 always
}

}  // namespace

PointCloud kl_point_cloud(const L1Code& code, int t) {
    if (t > code.N) throw std::invalid_argument("kl_point_cloud: t exceeds N");
    if (t < 0) throw std::invalid_argument("kl_point_cloud: t must be >= 0");
    PointCloud cloud;
    cloud.q = code.q;
    cloud.N = code.N;
    cloud.t = t;
    cloud.labels = code.points;
    cloud.error_points = enumerate_simplex(code.q, t);
    cloud.coords.reserve(cloud.labels.size());
    for (const SimplexPoint& h : cloud.labels) {
        const Int denom = multinomial(code.N, h);
        std::vector<Rational> row;
        row.reserve(cloud.error_points.size());
        Rational affine(0);
        for (const SimplexPoint& e : cloud.error_points) {
            std::vector<int> diff(h.coords);
            for (int i = 0; i < code.q; ++i) diff[static_cast<size_t>(i)] -= e[i];
            const Rational a = make_rational(multinomial(code.N - t, diff), denom);
            affine += Rational(multinomial(t, e)) * a;
            row.push_back(a);
        }
        if (affine != 1)
            throw std::logic_error("kl_point_cloud: affine invariant violated");
        cloud.coords.push_back(std::move(row));
    }
    return cloud;
}

Rational TverbergWitness::block_weight_sum(int block) const {
    Rational sum(0);
    for (const SimplexPoint& p : blocks[static_cast<size_t>(block)]) sum += weights.at(p);
    return sum;
}

bool TverbergWitness::verify(const PointCloud& cloud) const {
    if (blocks.empty()) return false;
    std::map<SimplexPoint, int> label_index;
    for (size_t i = 0; i < cloud.labels.size(); ++i) label_index[cloud.labels[i]] = static_cast<int>(i);

    std::vector<Rational> ref_sums;
    Rational ref_weight(0);
    for (size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].empty()) return false;
        std::vector<Rational> sums(static_cast<size_t>(cloud.dim()), Rational(0));
        Rational wsum(0);
        for (const SimplexPoint& p : blocks[j]) {
            auto it = weights.find(p);
            auto li = label_index.find(p);
            if (it == weights.end() || li == label_index.end()) return false;
            if (it->second <= 0) return false;
            for (int e = 0; e < cloud.dim(); ++e)
                sums[static_cast<size_t>(e)] += it->second * cloud.coords[static_cast<size_t>(li->second)][static_cast<size_t>(e)];
            wsum += it->second;
        }
        if (j == 0) {
            ref_sums = sums;
            ref_weight = wsum;
        } else if (sums != ref_sums || wsum != ref_weight) {
            return false;
        }
    }
    return true;
}

void TverbergWitness::normalize() {
    for (size_t j = 0; j < blocks.size(); ++j) {
        const Rational sum = block_weight_sum(static_cast<int>(j));
        if (sum == 0) throw std::logic_error("TverbergWitness::normalize: empty block");
        for (const SimplexPoint& p : blocks[j]) weights[p] /= sum;
    }
}

std::optional<std::map<SimplexPoint, Rational>> lp_feasible(const PointCloud& cloud,
                                                            const Partition& partition) {
    std::vector<AggregateColumn> columns;
    for (size_t j = 0; j < partition.size(); ++j) {
        if (partition[j].empty()) throw std::invalid_argument("lp_feasible: empty block");
        for (int li : partition[j]) {
            if (li < 0 || li >= cloud.size()) throw std::invalid_argument("lp_feasible: label index out of range");
            columns.push_back({static_cast<int>(j), {li}});
        }
    }
    auto x = solve_partition_lp(cloud, columns, static_cast<int>(partition.size()));
    if (!x) return std::nullopt;
    std::map<SimplexPoint, Rational> weights;
    for (size_t col = 0; col < columns.size(); ++col)
        weights[cloud.labels[static_cast<size_t>(columns[col].label_indices[0])]] = (*x)[col];
    return weights;
}

std::vector<std::vector<int>> composition_orbits(const std::vector<SimplexPoint>& labels) {
    std::map<std::vector<int>, int> orbit_of_class;
    std::vector<std::vector<int>> orbits;
    for (size_t i = 0; i < labels.size(); ++i) {
        std::vector<int> cls(labels[i].coords);
        std::sort(cls.begin(), cls.end(), std::greater<int>());
        auto [it, inserted] = orbit_of_class.try_emplace(cls, static_cast<int>(orbits.size()));
        if (inserted) orbits.emplace_back();
        orbits[static_cast<size_t>(it->second)].push_back(static_cast<int>(i));
    }
    return orbits;
}

namespace {

std::optional<TverbergWitness> try_orbit_strategy(const PointCloud& cloud, int K) {
    const auto orbits = composition_orbits(cloud.labels);
    const int r = static_cast<int>(orbits.size());
    if (r < K) return std::nullopt;
    std::optional<TverbergWitness> found;
    for_each_partition(r, K, [&](const std::vector<int>& assign) {
        std::vector<AggregateColumn> columns;
        for (int o = 0; o < r; ++o)
            columns.push_back({assign[static_cast<size_t>(o)], orbits[static_cast<size_t>(o)]});
        auto x = solve_partition_lp(cloud, columns, K);
        if (!x) return false;
        found = witness_from_solution(cloud, columns, K, *x);
        return true;
    });
    return found;
}

std::optional<TverbergWitness> try_exhaustive_strategy(const PointCloud& cloud, int K) {
    const int n = cloud.size();
    std::optional<TverbergWitness> found;
    for_each_partition(n, K, [&](const std::vector<int>& assign) {
        std::vector<AggregateColumn> columns;
        for (int li = 0; li < n; ++li) columns.push_back({assign[static_cast<size_t>(li)], {li}});
        auto x = solve_partition_lp(cloud, columns, K);
        if (!x) return false;
        found = witness_from_solution(cloud, columns, K, *x);
        return true;
    });
    return found;
}

}  // namespace

TverbergWitness find_witness(const PointCloud& cloud, int K, WitnessStrategy strategy,
                             const std::optional<Partition>& hint) {
    if (K < 1) throw std::invalid_argument("find_witness: K must be >= 1");
    constexpr int kExhaustiveLimit = 12;

    if (strategy == WitnessStrategy::Hinted) {
        if (!hint) throw std::invalid_argument("find_witness: hinted strategy without a hint");
        std::vector<AggregateColumn> columns;
        for (size_t j = 0; j < hint->size(); ++j)
            for (int li : (*hint)[j]) columns.push_back({static_cast<int>(j), {li}});
        auto x = solve_partition_lp(cloud, columns, static_cast<int>(hint->size()));
        if (!x)
            throw NoWitnessError(WitnessFailure::SearchExhausted,
                                 "no witness: the hinted partition is infeasible");
        return witness_from_solution(cloud, columns, static_cast<int>(hint->size()), *x);
    }

    if (strategy == WitnessStrategy::Orbit || strategy == WitnessStrategy::Auto) {
        if (auto w = try_orbit_strategy(cloud, K)) return *w;
        if (strategy == WitnessStrategy::Orbit)
            throw NoWitnessError(WitnessFailure::HintRequired,
                                 "no witness among orbit-union partitions; provide a hint "
                                 "or use the exhaustive strategy");
    }

    if (cloud.size() > kExhaustiveLimit)
        throw NoWitnessError(WitnessFailure::HintRequired,
                             "no witness: exhaustive search limited to 12 labels; provide a hint");
    if (auto w = try_exhaustive_strategy(cloud, K)) return *w;
    throw NoWitnessError(WitnessFailure::SearchExhausted,
                         "no witness: all canonical partitions are infeasible");
}

TverbergWitness radon_witness_k2(const PointCloud& cloud) {
    const int n = cloud.size();
    const int m = cloud.dim();
    detail::RatMatrix sys(static_cast<size_t>(m) + 1, std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int e = 0; e < m; ++e)
        for (int li = 0; li < n; ++li)
            sys[static_cast<size_t>(e)][static_cast<size_t>(li)] = cloud.coords[static_cast<size_t>(li)][static_cast<size_t>(e)];
    for (int li = 0; li < n; ++li) sys[static_cast<size_t>(m)][static_cast<size_t>(li)] = 1;

    auto y = detail::kernel_vector(std::move(sys), n);
    if (!y)
        throw NoWitnessError(WitnessFailure::SearchExhausted,
                             "no witness: the Radon kernel is trivial");
    TverbergWitness w;
    w.blocks.assign(2, {});
    for (int li = 0; li < n; ++li) {
        const Rational& v = (*y)[static_cast<size_t>(li)];
        if (v == 0) continue;
        const SimplexPoint& label = cloud.labels[static_cast<size_t>(li)];
        w.blocks[v > 0 ? 0 : 1].push_back(label);
        w.weights[label] = v > 0 ? v : -v;
    }
    for (auto& block : w.blocks) std::sort(block.begin(), block.end());
    if (!w.verify(cloud))
        throw std::logic_error("radon_witness_k2: kernel vector gave an invalid witness");
    return w;
}

}  // namespace simplexcodes
