#ifndef CONELAB_CONE_OFF_HPP
#define CONELAB_CONE_OFF_HPP

#include <optional>
#include <set>

#include "hyperbolicity.hpp"
#include "quasi.hpp"

namespace conelab {

/// A base graph plus one cone vertex per designated subset, each joined by
/// length-1 edges to every member of the subset.
struct ConedGraph {
    MetricGraph base;
    std::vector<std::vector<int>> coned_sets;  // set_id = position
    std::vector<int> cone_vertices;            // set_id -> vertex in extended
    MetricGraph extended;

    // measured metadata (delta_0, k_0, lambda_0 of the base construction)
    std::optional<DeltaResult> base_delta;
    std::optional<Rat> max_qc_constant;
    std::optional<Rat> dotted_path_constant;

    int cone_vertex(int set_id) const {
        if (set_id < 0 || set_id >= static_cast<int>(cone_vertices.size()))
            throw std::invalid_argument("unknown coned-set id " +
                                        std::to_string(set_id));
        return cone_vertices[set_id];
    }

    bool in_set(int set_id, int v) const {
        const auto& s = coned_sets.at(set_id);
        return std::find(s.begin(), s.end(), v) != s.end();
    }

    bool is_cone_vertex(int v) const { return v >= base.vertex_count(); }
};

struct ConeOffOptions {
    bool measure_metadata = true;
    DeltaOptions delta;                       // exhaustive budget
    std::optional<std::uint64_t> delta_seed;  // enables sampled fallback
    std::uint64_t delta_samples = 200000;
};

/// Farb cone-off: one new vertex per set, unit edges to every member.
inline ConedGraph cone_off(const MetricGraph& g,
                           const std::vector<std::vector<int>>& sets,
                           const ConeOffOptions& opt = {}) {
    ConedGraph cg;
    cg.base = g;
    cg.coned_sets = sets;
    const int n = g.vertex_count();
    std::vector<MetricGraph::Edge> edges = g.edges();
    int next = n;
    for (const auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("empty coned set");
        std::set<int> uniq;
        for (int v : s) {
            g.check_vertex(v);
            uniq.insert(v);
        }
        cg.cone_vertices.push_back(next);
        for (int v : uniq) edges.push_back({v, next, Rat(1)});
        ++next;
    }
    cg.extended = MetricGraph(next, edges, g.labels());
    if (opt.measure_metadata) {
        if (n <= opt.delta.exhaustive_budget)
            cg.base_delta = delta_four_point(g, opt.delta);
        else if (opt.delta_seed)
            cg.base_delta =
                delta_four_point_sampled(g, opt.delta_samples, *opt.delta_seed);
        Rat k0 = 0;
        for (const auto& s : sets) k0 = std::max(k0, quasiconvexity_constant(g, s));
        cg.max_qc_constant = k0;
    }
    return cg;
}

/// The canonical length-2 path x - c_i - x' through the cone vertex.
struct ElectricPath {
    int set_id;
    int x, x_prime;
    std::vector<int> vertices;  // {x, c_i, x'}
    Rat length{2};
};

inline ElectricPath electric_path(const ConedGraph& cg, int set_id, int x, int x_prime) {
    int c = cg.cone_vertex(set_id);
    if (!cg.in_set(set_id, x) || !cg.in_set(set_id, x_prime))
        throw std::invalid_argument("endpoint not in coned set " +
                                    std::to_string(set_id));
    return {set_id, x, x_prime, {x, c, x_prime}, Rat(2)};
}

/// Replaces each hop through a cone vertex by the projected tie-break base
/// geodesic inside the coned set; base subpaths are preserved verbatim.
inline DottedPath de_electrify(const ConedGraph& cg, const std::vector<int>& path) {
    if (path.empty()) throw std::invalid_argument("empty path");
    if (cg.is_cone_vertex(path.front()) || cg.is_cone_vertex(path.back()))
        throw std::invalid_argument("path endpoint is a cone vertex");
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!cg.extended.adjacent(path[i], path[i + 1]))
            throw std::invalid_argument("not a path in the extended graph");
        if (cg.is_cone_vertex(path[i]) && cg.is_cone_vertex(path[i + 1]))
            throw std::invalid_argument("consecutive cone vertices");
    }
    std::vector<int> out;
    auto push = [&out](int v) {
        if (out.empty() || out.back() != v) out.push_back(v);
    };
    for (size_t i = 0; i < path.size(); ++i) {
        int v = path[i];
        if (!cg.is_cone_vertex(v)) {
            push(v);
            continue;
        }
        int set_id = v - cg.base.vertex_count();
        int entry = path[i - 1];
        int exit = path[i + 1];
        if (!cg.in_set(set_id, entry) || !cg.in_set(set_id, exit))
            throw std::invalid_argument("cone visit with endpoint outside its set");
        auto geo = geodesic(cg.base, entry, exit);
        for (int w : geo.vertices)
            push(nearest_point_projection(cg.base, cg.coned_sets[set_id], w));
        push(exit);
    }
    DottedPath dp;
    dp.vertices = out;
    dp.step_bound = 0;
    std::map<int, std::vector<std::optional<Rat>>> dist;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        if (!dist.count(out[i]))
            dist[out[i]] = single_source_distances(cg.base, out[i]);
        const auto& d = dist[out[i]][out[i + 1]];
        if (!d) throw std::invalid_argument("base graph is not connected");
        dp.step_bound = std::max(dp.step_bound, *d);
    }
    return dp;
}

/// Max de-electrification step bound over the extended tie-break geodesics of
/// the given base pairs; materializes the lambda_0 metadata by measurement.
inline Rat calibrate_dotted_path_constant(
    ConedGraph& cg, const std::vector<std::pair<int, int>>& pairs) {
    Rat lam = 0;
    for (const auto& [x, y] : pairs) {
        auto geo = geodesic(cg.extended, x, y);
        lam = std::max(lam, de_electrify(cg, geo.vertices).step_bound);
    }
    cg.dotted_path_constant = lam;
    return lam;
}

struct ConeOffComparison {
    Rat max_hausdorff;   // D = max_i Hd(A_i, B_i) in the base graph
    QuasiParams params;  // measured fit of the identity map on base vertices
};

/// Measures the identity-on-base map between the two cone-offs of g.
inline ConeOffComparison compare_cone_offs(const MetricGraph& g,
                                           const std::vector<std::vector<int>>& sets_a,
                                           const std::vector<std::vector<int>>& sets_b) {
    if (sets_a.size() != sets_b.size())
        throw std::invalid_argument("coned-set index mismatch");
    ConeOffComparison out;
    out.max_hausdorff = 0;
    for (size_t i = 0; i < sets_a.size(); ++i)
        out.max_hausdorff =
            std::max(out.max_hausdorff, hausdorff_distance(g, sets_a[i], sets_b[i]));
    ConeOffOptions opt;
    opt.measure_metadata = false;
    auto ca = cone_off(g, sets_a, opt);
    auto cb = cone_off(g, sets_b, opt);
    const int n = g.vertex_count();
    std::vector<std::pair<Rat, Rat>> samples;
    Rat cap = 0;
    for (int u = 0; u < n; ++u) {
        auto da = single_source_distances(ca.extended, u);
        auto db = single_source_distances(cb.extended, u);
        for (int v = u + 1; v < n; ++v) {
            samples.emplace_back(*da[v], *db[v]);
            cap = std::max({cap, *da[v], *db[v]});
        }
    }
    out.params = detail::lattice_fit(samples, cap);
    return out;
}

struct FellowTravelRow {
    int x, y;
    Rat hausdorff_extended;  // Hd in the extended metric, base vs extended geodesic
};

/// Per-pair Hausdorff distance (in the extended metric) between the tie-break
/// base geodesic and the tie-break extended geodesic.
inline std::vector<FellowTravelRow> fellow_travel_stats(
    const ConedGraph& cg, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<FellowTravelRow> rows;
    for (const auto& [x, y] : pairs) {
        cg.base.check_vertex(x);
        cg.base.check_vertex(y);
        auto gb = geodesic(cg.base, x, y);
        auto ge = geodesic(cg.extended, x, y);
        rows.push_back({x, y,
                        hausdorff_distance(cg.extended, gb.vertices, ge.vertices)});
    }
    return rows;
}

/// Truncated combinatorial horoball attachment.
struct HoroballGraph {
    MetricGraph graph;
    int depth = 0;
    // vertex -> (set index, member index within set, layer); base vertices
    // are layer 0 and keep their ids.
    std::map<int, std::tuple<int, int, int>> layer_of;
};

/// For each set A adds layers A x {1..depth}: unit vertical edges between
/// consecutive layers, and horizontal unit edges at layer k whenever the base
/// distance of the two members is <= 2^k.
inline HoroballGraph attach_horoballs(const MetricGraph& g,
                                      const std::vector<std::vector<int>>& sets,
                                      int depth) {
    if (depth < 1) throw std::invalid_argument("horoball depth must be >= 1");
    std::vector<MetricGraph::Edge> edges = g.edges();
    int next = g.vertex_count();
    HoroballGraph out;
    out.depth = depth;
    for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
        const auto& a = sets[s];
        if (a.empty()) throw std::invalid_argument("empty horoball set");
        const int m = static_cast<int>(a.size());
        std::vector<std::vector<Rat>> d(m);
        for (int i = 0; i < m; ++i) {
            auto di = single_source_distances(g, a[i]);
            d[i].resize(m);
            for (int j = 0; j < m; ++j) {
                if (!di[a[j]]) throw std::invalid_argument("graph is not connected");
                d[i][j] = *di[a[j]];
            }
        }
        // id(i, k) for k = 1..depth
        auto id = [&](int i, int k) { return next + (k - 1) * m + i; };
        for (int k = 1; k <= depth; ++k)
            for (int i = 0; i < m; ++i)
                out.layer_of[id(i, k)] = {s, i, k};
        for (int i = 0; i < m; ++i) {
            edges.push_back({a[i], id(i, 1), Rat(1)});
            for (int k = 1; k < depth; ++k)
                edges.push_back({id(i, k), id(i, k + 1), Rat(1)});
        }
        for (int k = 1; k <= depth; ++k) {
            Rat threshold = Rat(Int(1) << std::min(k, 62));
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (d[i][j] <= threshold)
                        edges.push_back({id(i, k), id(j, k), Rat(1)});
        }
        next += depth * m;
    }
    out.graph = MetricGraph(next, edges, g.labels());
    return out;
}

}  // namespace conelab

#endif
