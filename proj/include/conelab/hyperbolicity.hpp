#ifndef CONELAB_HYPERBOLICITY_HPP
#define CONELAB_HYPERBOLICITY_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "errors.hpp"
#include "shortest_paths.hpp"

namespace conelab {

/// Gromov product (a.b)_base = (d(base,a) + d(base,b) - d(a,b)) / 2.
inline Rat gromov_product(const MetricGraph& g, int base, int a, int b) {
    auto d = single_source_distances(g, base);
    auto da = single_source_distances(g, a);
    if (!d[a] || !d[b] || !da[b])
        throw std::invalid_argument("graph is not connected");
    return (*d[a] + *d[b] - *da[b]) / 2;
}

struct DeltaOptions {
    int exhaustive_budget = 300;  // max vertices for the O(n^4) scan
};

struct DeltaResult {
    Rat delta;
    bool exact = true;  // false for the sampled lower bound
    std::uint64_t sampled_quadruples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

// Scales a distance matrix to int64 if a common denominator fits; empty on
// overflow risk (caller falls back to exact rationals).
inline bool scale_matrix(const std::vector<std::vector<Rat>>& m,
                         std::vector<std::vector<std::int64_t>>& out) {
    Int lcm = 1;
    for (const auto& row : m)
        for (const auto& r : row) lcm = boost::multiprecision::lcm(lcm, rat_den(r));
    if (lcm > Int(1) << 20) return false;
    Int maxv = 0;
    for (const auto& row : m)
        for (const auto& r : row) {
            Int v = rat_num(r) * (lcm / rat_den(r));
            if (v > maxv) maxv = v;
        }
    if (maxv > Int(1) << 40) return false;
    const int n = static_cast<int>(m.size());
    out.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int v = rat_num(m[i][j]) * (lcm / rat_den(m[i][j]));
            out[i][j] = v.convert_to<std::int64_t>();
        }
    return true;
}

inline Int scale_denominator(const std::vector<std::vector<Rat>>& m) {
    Int lcm = 1;
    for (const auto& row : m)
        for (const auto& r : row) lcm = boost::multiprecision::lcm(lcm, rat_den(r));
    return lcm;
}

template <typename T>
inline T four_point_term(const std::vector<std::vector<T>>& d, int w, int x,
                         int y, int z) {
    // doubled Gromov products rel w
    T pxz = d[w][x] + d[w][z] - d[x][z];
    T pzy = d[w][z] + d[w][y] - d[z][y];
    T pxy = d[w][x] + d[w][y] - d[x][y];
    return std::min(pxz, pzy) - pxy;
}

}  // namespace detail

/// Exact four-point hyperbolicity constant:
///   max over quadruples (x,y,z,w) of min((x.z)_w, (z.y)_w) - (x.y)_w.
/// Refuses graphs above the vertex budget; use delta_four_point_sampled there.
inline DeltaResult delta_four_point(const MetricGraph& g,
                                    const DeltaOptions& opt = {}) {
    const int n = g.vertex_count();
    if (n > opt.exhaustive_budget)
        throw BudgetError("delta_four_point: " + std::to_string(n) +
                          " vertices exceeds exhaustive budget " +
                          std::to_string(opt.exhaustive_budget));
    auto dist = all_pairs_distances(g);
    DeltaResult res;
    std::vector<std::vector<std::int64_t>> di;
    if (detail::scale_matrix(dist, di)) {
        std::int64_t best = 0;
        // doubled Gromov products rel w, reused across the (x,y) sweep
        std::vector<std::vector<std::int64_t>> p(n, std::vector<std::int64_t>(n));
        for (int w = 0; w < n; ++w) {
            const auto& dw = di[w];
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) p[x][y] = dw[x] + dw[y] - di[x][y];
            for (int z = 0; z < n; ++z) {
                const auto& pz = p[z];
                for (int x = 0; x < n; ++x) {
                    const std::int64_t pxz = p[x][z];
                    const auto& px = p[x];
                    for (int y = 0; y < n; ++y) {
                        std::int64_t v = std::min(pxz, pz[y]) - px[y];
                        if (v > best) best = v;
                    }
                }
            }
        }
        Int den = detail::scale_denominator(dist);
        res.delta = Rat(Int(best), den * 2);
        return res;
    }
    Rat best = 0;
    for (int w = 0; w < n; ++w)
        for (int z = 0; z < n; ++z)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    Rat v = detail::four_point_term(dist, w, x, y, z);
                    if (v > best) best = v;
                }
    res.delta = best / 2;
    return res;
}

/// Sampled lower bound on the four-point constant, with the sample
/// certificate (count, seed) recorded in the result.
inline DeltaResult delta_four_point_sampled(const MetricGraph& g,
                                            std::uint64_t count,
                                            std::uint64_t seed) {
    const int n = g.vertex_count();
    auto dist = all_pairs_distances(g);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    Rat best = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        int w = pick(rng), x = pick(rng), y = pick(rng), z = pick(rng);
        Rat v = detail::four_point_term(dist, w, x, y, z);
        if (v > best) best = v;
    }
    DeltaResult res;
    res.delta = best / 2;
    res.exact = false;
    res.sampled_quadruples = count;
    res.seed = seed;
    return res;
}

/// Max over sides S (tie-break geodesics between consecutive corners) and
/// points p on S of d(p, union of the other sides).
inline Rat polygon_slimness(const MetricGraph& g, const std::vector<int>& corners) {
    const int n = static_cast<int>(corners.size());
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 corners");
    std::vector<std::vector<int>> sides(n);
    for (int i = 0; i < n; ++i)
        sides[i] = geodesic(g, corners[i], corners[(i + 1) % n]).vertices;
    Rat worst = 0;
    for (int i = 0; i < n; ++i) {
        std::set<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.insert(sides[j].begin(), sides[j].end());
        auto d = multi_source_distances(
            g, std::vector<int>(others.begin(), others.end()));
        for (int p : sides[i]) {
            if (!d[p]) throw std::invalid_argument("graph is not connected");
            worst = std::max(worst, *d[p]);
        }
    }
    return worst;
}

}  // namespace conelab

#endif
