#ifndef CONELAB_METRIC_GRAPH_HPP
#define CONELAB_METRIC_GRAPH_HPP

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace conelab {

/// Finite weighted graph with exact rational edge lengths. Vertices are
/// 0..vertex_count-1. Parallel edges are collapsed to the shorter length
/// when the adjacency structure is built; self-loops are rejected.
class MetricGraph {
public:
    struct Edge {
        int u = 0;
        int v = 0;
        Rat length;
    };

    MetricGraph() = default;

    MetricGraph(int vertex_count, std::vector<Edge> edges,
                std::map<int, std::string> labels = {})
        : vertex_count_(vertex_count),
          edges_(std::move(edges)),
          labels_(std::move(labels)) {
        build_adjacency();
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<int, std::string>& labels() const { return labels_; }

    /// Adjacency with parallel edges collapsed to min length.
    const std::vector<std::pair<int, Rat>>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    bool unit_lengths() const { return unit_lengths_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count_)
            throw std::out_of_range("unknown vertex-id " + std::to_string(v));
    }

    Rat edge_length(int u, int v) const {
        check_vertex(u);
        for (const auto& [w, len] : adjacency_[u])
            if (w == v) return len;
        throw std::invalid_argument("vertices " + std::to_string(u) + "," +
                                    std::to_string(v) + " not adjacent");
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        for (const auto& [w, len] : adjacency_[u])
            if (w == v) return true;
        return false;
    }

private:
    void build_adjacency() {
        if (vertex_count_ < 0)
            throw std::invalid_argument("negative vertex count");
        adjacency_.assign(vertex_count_, {});
        std::vector<Edge> norm;
        norm.reserve(edges_.size());
        for (const auto& e : edges_) {
            check_vertex(e.u);
            check_vertex(e.v);
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " +
                                            std::to_string(e.u));
            if (e.length <= 0)
                throw std::invalid_argument("non-positive edge length");
            norm.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.length});
        }
        std::sort(norm.begin(), norm.end(), [](const Edge& a, const Edge& b) {
            if (a.u != b.u) return a.u < b.u;
            if (a.v != b.v) return a.v < b.v;
            return a.length < b.length;
        });
        unit_lengths_ = true;
        for (size_t i = 0; i < norm.size(); ++i) {
            if (i > 0 && norm[i].u == norm[i - 1].u && norm[i].v == norm[i - 1].v)
                continue;  // parallel edge: the sort put the shortest first
            adjacency_[norm[i].u].emplace_back(norm[i].v, norm[i].length);
            adjacency_[norm[i].v].emplace_back(norm[i].u, norm[i].length);
            if (norm[i].length != 1) unit_lengths_ = false;
        }
        // edges sorted by (min endpoint, max endpoint), so each adjacency
        // list comes out sorted by neighbor id
    }

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::map<int, std::string> labels_;
    std::vector<std::vector<std::pair<int, Rat>>> adjacency_;
    bool unit_lengths_ = true;
};

struct GraphDiagnostics {
    bool connected = false;
    int component_count = 0;
    int weight_violations = 0;  // non-positive lengths in the raw edge list
    int self_loops = 0;
    bool ok() const { return connected && weight_violations == 0 && self_loops == 0; }
};

/// Pure report: connectivity, component count, weight sanity. Never throws,
/// so it can be run on raw edge data before constructing a MetricGraph.
inline GraphDiagnostics validate(int vertex_count,
                                 const std::vector<MetricGraph::Edge>& edges) {
    GraphDiagnostics d;
    std::vector<std::vector<int>> adj(std::max(vertex_count, 0));
    for (const auto& e : edges) {
        if (e.length <= 0) ++d.weight_violations;
        if (e.u == e.v) {
            ++d.self_loops;
            continue;
        }
        if (e.u >= 0 && e.u < vertex_count && e.v >= 0 && e.v < vertex_count) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    }
    std::vector<int> comp(vertex_count, -1);
    int ncomp = 0;
    for (int s = 0; s < vertex_count; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    q.push(w);
                }
        }
        ++ncomp;
    }
    d.component_count = ncomp;
    d.connected = (vertex_count <= 1) || ncomp == 1;
    return d;
}

inline GraphDiagnostics validate(const MetricGraph& g) {
    return validate(g.vertex_count(), g.edges());
}

// Small builders used all over the tests.

inline MetricGraph path_graph(int n, const Rat& len = 1) {
    std::vector<MetricGraph::Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, len});
    return MetricGraph(n, es);
}

inline MetricGraph cycle_graph(int n, const Rat& len = 1) {
    std::vector<MetricGraph::Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, len});
    return MetricGraph(n, es);
}

inline MetricGraph star_graph(int leaves, const Rat& len = 1) {
    std::vector<MetricGraph::Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i, len});
    return MetricGraph(leaves + 1, es);
}

}  // namespace conelab

#endif
