#ifndef CONELAB_BOUNDARY_HPP
#define CONELAB_BOUNDARY_HPP

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cone_off.hpp"
#include "hyperbolicity.hpp"
#include "shortest_paths.hpp"

namespace conelab {

/// Finite prefix of a would-be geodesic ray; the basepoint is vertices[0].
struct RayPrefix {
    std::vector<int> vertices;
};

// ---- divergence ---------------------------------------------------------

struct DivergenceProfile {
    int basepoint = 0;
    // lower-triangular Gromov products: table[m][n] = (x_m . x_n)_base, n < m
    std::vector<std::vector<Rat>> table;
    // tail_infimum[k] = inf of table entries with n >= k
    std::vector<Rat> tail_infimum;
    bool stalled = false;  // tail infimum gained < 1 over the final third
    bool converging = false;
};

inline DivergenceProfile divergence_profile(const MetricGraph& g,
                                            const std::vector<int>& seq,
                                            int basepoint) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    g.check_vertex(basepoint);
    for (int v : seq) g.check_vertex(v);
    const int k = static_cast<int>(seq.size());
    DivergenceProfile out;
    out.basepoint = basepoint;
    out.table.resize(k);
    for (int m = 1; m < k; ++m)
        for (int n = 0; n < m; ++n)
            out.table[m].push_back(gromov_product(g, basepoint, seq[m], seq[n]));
    // tail_infimum[t] = min over pairs with both indices >= t (t <= k - 2)
    if (k >= 2) {
        out.tail_infimum.assign(k - 1, Rat(0));
        for (int t = k - 2; t >= 0; --t) {
            std::optional<Rat> inf;
            if (t + 1 < k - 1) inf = out.tail_infimum[t + 1];
            for (int m = t + 1; m < k; ++m) {
                const Rat& p = out.table[m][t];
                if (!inf || p < *inf) inf = p;
            }
            out.tail_infimum[t] = *inf;
        }
    }
    if (out.tail_infimum.size() >= 4) {
        size_t sz = out.tail_infimum.size();
        out.stalled =
            out.tail_infimum[sz - 1] - out.tail_infimum[sz - 1 - sz / 3] < 1;
        out.converging = !out.stalled;
    }
    return out;
}

// ---- ray classification -------------------------------------------------

struct RayClass {
    enum class Kind { Horizontal, Vertical, Undetermined };
    Kind kind = Kind::Undetermined;
    int set_id = -1;  // coned set index for Vertical
    Rat window;
};

/// Finite trichotomy: a prefix is Vertical(i) when its projections onto the
/// coned set spread past the window while its extended-metric diameter
/// stalls below it, Horizontal when the extended diameter passes the window.
inline RayClass classify_ray(const ConedGraph& cg, const RayPrefix& r,
                             const Rat& window) {
    if (r.vertices.empty()) throw std::invalid_argument("empty ray prefix");
    for (int v : r.vertices) cg.base.check_vertex(v);
    Rat total = 0;
    for (size_t i = 0; i + 1 < r.vertices.size(); ++i)
        total += cg.base.edge_length(r.vertices[i], r.vertices[i + 1]);
    if (distance(cg.base, r.vertices.front(), r.vertices.back()) != total)
        throw std::invalid_argument("prefix is not a geodesic of the base graph");

    RayClass out;
    out.window = window;
    Rat ext_diam = 0;
    {
        std::map<int, std::vector<std::optional<Rat>>> dist;
        for (int v : r.vertices)
            if (!dist.count(v)) dist[v] = single_source_distances(cg.extended, v);
        for (int u : r.vertices)
            for (int v : r.vertices)
                if (auto d = dist[u][v]; d && *d > ext_diam) ext_diam = *d;
    }
    if (ext_diam > window) {
        out.kind = RayClass::Kind::Horizontal;
        return out;
    }
    for (size_t i = 0; i < cg.coned_sets.size(); ++i) {
        std::vector<int> proj;
        for (int v : r.vertices)
            proj.push_back(nearest_point_projection(cg.base, cg.coned_sets[i], v));
        Rat diam = 0;
        std::map<int, std::vector<std::optional<Rat>>> dist;
        for (int p : proj)
            if (!dist.count(p)) dist[p] = single_source_distances(cg.base, p);
        for (int u : proj)
            for (int v : proj)
                if (auto d = dist[u][v]; d && *d > diam) diam = *d;
        if (diam > window) {
            out.kind = RayClass::Kind::Vertical;
            out.set_id = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

// ---- Mitra profile ------------------------------------------------------

struct MitraProfile {
    int basepoint = 0;                       // y0 as a Y vertex id
    std::vector<Rat> table;                  // table[N] = M(N); contiguous from 0
    long long pair_count = 0;                // exhaustive pairs examined
};

namespace detail {

inline std::vector<long long> ll_distances(const MetricGraph& g, int src) {
    std::vector<long long> d(g.vertex_count(), -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const auto& [v, len] : g.neighbors(u))
            if (d[v] < 0) {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
    }
    return d;
}

inline std::vector<Rat> rat_distances(const MetricGraph& g, int src) {
    auto d = single_source_distances(g, src);
    std::vector<Rat> out(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        if (!d[i]) throw std::invalid_argument("graph is not connected");
        out[i] = *d[i];
    }
    return out;
}

/// Shared M(N) scan over precomputed distance tables. "Avoids B(y0, N)" is
/// taken with the open ball, so the identity embedding yields M(N) = N.
template <class D>
MitraProfile mitra_scan(const std::vector<int>& f, int y0, int n_max,
                        const std::vector<bool>& y_excluded,
                        const std::vector<std::vector<D>>& dy,
                        const std::vector<std::vector<D>>& dx_from_image,
                        const std::vector<D>& dx_from_base) {
    const int ny = static_cast<int>(dy.size());
    const int nx = static_cast<int>(dx_from_base.size());
    MitraProfile out;
    out.basepoint = y0;
    std::vector<std::pair<D, D>> found;  // (Y-clearance, X-interval distance)
    for (int u = 0; u < ny; ++u) {
        if (!y_excluded.empty() && y_excluded[u]) continue;
        for (int v = u; v < ny; ++v) {
            if (!y_excluded.empty() && y_excluded[v]) continue;
            ++out.pair_count;
            // clearance: nearest approach of the Y-interval to y0
            D total_y = dy[u][v];
            D clear = dy[y0][u];
            for (int w = 0; w < ny; ++w)
                if (dy[u][w] + dy[v][w] == total_y && dy[y0][w] < clear)
                    clear = dy[y0][w];
            // distance from f(y0) to the X-interval of the images
            D total_x = dx_from_image[u][f[v]];
            D best = dx_from_base[f[u]];
            for (int w = 0; w < nx; ++w)
                if (dx_from_image[u][w] + dx_from_image[v][w] == total_x &&
                    dx_from_base[w] < best)
                    best = dx_from_base[w];
            found.emplace_back(clear, best);
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        std::optional<D> m;
        for (const auto& [clear, val] : found)
            if (clear >= D(n) && (!m || val < *m)) m = val;
        if (!m) break;  // table stays contiguous from 0
        out.table.push_back(Rat(*m));
    }
    return out;
}

}  // namespace detail

/// M(N) per the interval convention: minimum over Y-vertex pairs whose
/// Y-interval avoids the open ball B(y0, N) of the distance in X from f(y0)
/// to the X-interval of the image pair. Exhaustive over non-excluded pairs.
inline MitraProfile mitra_profile(const MetricGraph& y, const MetricGraph& x,
                                  const std::vector<int>& f, int y0, int n_max,
                                  const std::vector<bool>& y_excluded = {}) {
    if (static_cast<int>(f.size()) != y.vertex_count())
        throw std::invalid_argument("vertex map size mismatch");
    y.check_vertex(y0);
    {
        std::vector<bool> hit(x.vertex_count(), false);
        for (int img : f) {
            x.check_vertex(img);
            if (hit[img]) throw std::invalid_argument("vertex map not injective");
            hit[img] = true;
        }
    }
    const int ny = y.vertex_count();
    if (y.unit_lengths() && x.unit_lengths()) {
        std::vector<std::vector<long long>> dy(ny), dxi(ny);
        for (int u = 0; u < ny; ++u) {
            dy[u] = detail::ll_distances(y, u);
            dxi[u] = detail::ll_distances(x, f[u]);
        }
        auto dxb = detail::ll_distances(x, f[y0]);
        for (const auto& e : y.edges())
            if (dxi[e.u][f[e.v]] > 1)
                throw std::invalid_argument("vertex map is not edge-respecting");
        for (int u = 0; u < ny; ++u)
            for (long long d : dy[u])
                if (d < 0) throw std::invalid_argument("Y is not connected");
        return detail::mitra_scan<long long>(f, y0, n_max, y_excluded, dy, dxi, dxb);
    }
    std::vector<std::vector<Rat>> dy(ny), dxi(ny);
    for (int u = 0; u < ny; ++u) {
        dy[u] = detail::rat_distances(y, u);
        dxi[u] = detail::rat_distances(x, f[u]);
    }
    auto dxb = detail::rat_distances(x, f[y0]);
    for (const auto& e : y.edges())
        if (dxi[e.u][f[e.v]] > e.length)
            throw std::invalid_argument("vertex map is not edge-respecting");
    return detail::mitra_scan<Rat>(f, y0, n_max, y_excluded, dy, dxi, dxb);
}

// ---- Cannon-Thurston consistency probe ----------------------------------

struct CtVerdict {
    std::vector<Rat> y_curve;  // (a_n . b_n) at the Y basepoint
    std::vector<Rat> x_curve;  // images, at the X basepoint
    std::string verdict;       // "consistent", "stalled", "inconclusive"
};

/// Finite proxy for sequence-independence of boundary extensions: when the
/// two sequences converge together in Y (mutual products diverge), do their
/// images still converge together in X?
inline std::vector<CtVerdict> ct_consistency_probe(
    const MetricGraph& y, const MetricGraph& x, const std::vector<int>& f, int y0,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& seq_pairs) {
    if (static_cast<int>(f.size()) != y.vertex_count())
        throw std::invalid_argument("vertex map size mismatch");
    y.check_vertex(y0);
    std::vector<CtVerdict> out;
    auto gains = [](const std::vector<Rat>& c) {
        if (c.size() < 4) return false;
        size_t third = c.size() / 3;
        return c.back() - c[c.size() - 1 - third] >= 1;
    };
    for (const auto& [sa, sb] : seq_pairs) {
        if (sa.size() != sb.size() || sa.empty())
            throw std::invalid_argument("sequence pair shape mismatch");
        CtVerdict v;
        for (size_t i = 0; i < sa.size(); ++i) {
            y.check_vertex(sa[i]);
            y.check_vertex(sb[i]);
            v.y_curve.push_back(gromov_product(y, y0, sa[i], sb[i]));
            v.x_curve.push_back(gromov_product(x, f[y0], f[sa[i]], f[sb[i]]));
        }
        bool ydiv = gains(v.y_curve), xdiv = gains(v.x_curve);
        v.verdict = !ydiv ? "inconclusive" : (xdiv ? "consistent" : "stalled");
        out.push_back(std::move(v));
    }
    return out;
}

// ---- projection growth --------------------------------------------------

/// diam of the nearest-point projections of the prefix r[0..n] onto A.
inline std::vector<Rat> limit_projection_growth(const MetricGraph& g,
                                                const std::vector<int>& a,
                                                const RayPrefix& r) {
    if (a.empty()) throw std::invalid_argument("A empty");
    for (int v : a) g.check_vertex(v);
    std::vector<Rat> out;
    std::vector<int> proj;
    Rat diam = 0;
    std::map<int, std::vector<std::optional<Rat>>> dist;
    for (int v : r.vertices) {
        int p = nearest_point_projection(g, a, v);
        if (!dist.count(p)) dist[p] = single_source_distances(g, p);
        for (int q : proj)
            if (auto d = dist[p][q]; d && *d > diam) diam = *d;
        proj.push_back(p);
        out.push_back(diam);
    }
    return out;
}

}  // namespace conelab

#endif
