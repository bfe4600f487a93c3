#ifndef CONELAB_SHORTEST_PATHS_HPP
#define CONELAB_SHORTEST_PATHS_HPP

#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "metric_graph.hpp"

namespace conelab {

/// One geodesic with the lexicographically-smallest vertex sequence among
/// all shortest paths (deterministic tie-breaking).
struct GeodesicPath {
    std::vector<int> vertices;
    Rat total_length;
};

namespace detail {

inline void require_connected(const MetricGraph& g) {
    auto d = validate(g);
    if (!d.connected)
        throw std::invalid_argument("graph is not connected (" +
                                    std::to_string(d.component_count) +
                                    " components)");
}

}  // namespace detail

/// Exact single-source shortest-path lengths from every source in `sources`
/// (multi-source: distance to the nearest source). Unreachable = nullopt.
inline std::vector<std::optional<Rat>> multi_source_distances(
    const MetricGraph& g, const std::vector<int>& sources) {
    for (int s : sources) g.check_vertex(s);
    const int n = g.vertex_count();
    std::vector<std::optional<Rat>> dist(n);
    if (g.unit_lengths()) {
        std::queue<int> q;
        for (int s : sources)
            if (!dist[s]) {
                dist[s] = Rat(0);
                q.push(s);
            }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& [w, len] : g.neighbors(v))
                if (!dist[w]) {
                    dist[w] = *dist[v] + 1;
                    q.push(w);
                }
        }
        return dist;
    }
    using Entry = std::pair<Rat, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    std::vector<bool> done(n, false);
    for (int s : sources) {
        dist[s] = Rat(0);
        pq.emplace(Rat(0), s);
    }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = true;
        for (const auto& [w, len] : g.neighbors(v)) {
            Rat nd = d + len;
            if (!dist[w] || nd < *dist[w]) {
                dist[w] = nd;
                pq.emplace(nd, w);
            }
        }
    }
    return dist;
}

inline std::vector<std::optional<Rat>> single_source_distances(
    const MetricGraph& g, int source) {
    return multi_source_distances(g, {source});
}

/// Exact shortest-path length. Requires a connected graph.
inline Rat distance(const MetricGraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    auto dist = single_source_distances(g, u);
    if (!dist[v]) throw std::invalid_argument("graph is not connected");
    return *dist[v];
}

/// All-pairs distance matrix (throws if disconnected).
inline std::vector<std::vector<Rat>> all_pairs_distances(const MetricGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Rat>> m(n);
    for (int s = 0; s < n; ++s) {
        auto d = single_source_distances(g, s);
        m[s].resize(n);
        for (int v = 0; v < n; ++v) {
            if (!d[v]) throw std::invalid_argument("graph is not connected");
            m[s][v] = *d[v];
        }
    }
    return m;
}

/// Geodesic with deterministic tie-breaking: among all shortest u-v paths,
/// the lexicographically smallest vertex-id sequence. Built greedily; at each
/// step the smallest-id neighbor that still lies on a shortest path wins.
inline GeodesicPath geodesic(const MetricGraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    auto du = single_source_distances(g, u);
    auto dv = single_source_distances(g, v);
    if (!du[v]) throw std::invalid_argument("graph is not connected");
    const Rat total = *du[v];
    GeodesicPath p;
    p.total_length = total;
    p.vertices.push_back(u);
    int cur = u;
    while (cur != v) {
        int best = -1;
        for (const auto& [w, len] : g.neighbors(cur)) {
            if (*du[w] == *du[cur] + len && *du[w] + *dv[w] == total) {
                if (best < 0 || w < best) best = w;
            }
        }
        if (best < 0) throw std::logic_error("geodesic walk stuck");  // unreachable
        p.vertices.push_back(best);
        cur = best;
    }
    return p;
}

/// The union of vertex sets of all geodesics between u and v:
/// {w : d(u,w) + d(w,v) = d(u,v)}.
inline std::vector<int> interval(const MetricGraph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    auto du = single_source_distances(g, u);
    auto dv = single_source_distances(g, v);
    if (!du[v]) throw std::invalid_argument("graph is not connected");
    const Rat total = *du[v];
    std::vector<int> out;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (du[w] && *du[w] + *dv[w] == total) out.push_back(w);
    return out;
}

/// d(x, A) for a nonempty vertex set A.
inline Rat distance_to_set(const MetricGraph& g, const std::vector<int>& a, int x) {
    if (a.empty()) throw std::invalid_argument("empty vertex set");
    auto d = multi_source_distances(g, a);
    if (!d[x]) throw std::invalid_argument("graph is not connected");
    return *d[x];
}

/// Exact Hausdorff distance between two nonempty vertex sets.
inline Rat hausdorff_distance(const MetricGraph& g, const std::vector<int>& s,
                              const std::vector<int>& t) {
    if (s.empty() || t.empty()) throw std::invalid_argument("empty vertex set");
    auto ds = multi_source_distances(g, s);
    auto dt = multi_source_distances(g, t);
    Rat h = 0;
    for (int v : s) {
        if (!dt[v]) throw std::invalid_argument("graph is not connected");
        h = std::max(h, *dt[v]);
    }
    for (int v : t) {
        if (!ds[v]) throw std::invalid_argument("graph is not connected");
        h = std::max(h, *ds[v]);
    }
    return h;
}

/// A point of A realizing d(x, A); ties broken by lowest vertex-id.
inline int nearest_point_projection(const MetricGraph& g,
                                    const std::vector<int>& a, int x) {
    if (a.empty()) throw std::invalid_argument("empty vertex set");
    g.check_vertex(x);
    auto d = single_source_distances(g, x);
    int best = -1;
    Rat bd = 0;
    for (int v : a) {
        g.check_vertex(v);
        if (!d[v]) continue;
        if (best < 0 || *d[v] < bd || (*d[v] == bd && v < best)) {
            best = v;
            bd = *d[v];
        }
    }
    if (best < 0) throw std::invalid_argument("A unreachable from x");
    return best;
}

}  // namespace conelab

#endif
