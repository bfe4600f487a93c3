#ifndef CONELAB_QUASI_HPP
#define CONELAB_QUASI_HPP

#include <map>
#include <vector>

#include "shortest_paths.hpp"

namespace conelab {

/// Vertex sequence with a bounded step length; the discrete stand-in for a
/// quasigeodesic.
struct DottedPath {
    std::vector<int> vertices;
    Rat step_bound;
};

struct QuasiParams {
    Rat lambda;  // >= 1
    Rat eps;     // >= 0
    bool within_cap = true;  // false when no lattice lambda fit under the cap
};

namespace detail {

inline const std::vector<Rat>& lambda_lattice() {
    static const std::vector<Rat> l = {Rat(1),      Rat(9, 8), Rat(5, 4),
                                       Rat(3, 2),   Rat(2),    Rat(3),
                                       Rat(4)};
    return l;
}

/// Smallest rational with denominator <= 8 that is >= x (x >= 0).
inline Rat lattice_ceil(const Rat& x) {
    if (x <= 0) return Rat(0);
    bool have = false;
    Rat best = 0;
    for (int q = 1; q <= 8; ++q) {
        Int p = (rat_num(x) * q + rat_den(x) - 1) / rat_den(x);  // ceil(x*q)
        Rat cand(p, q);
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return best;
}

/// Minimal (lambda, eps) on the search lattice such that for every sample
/// (s, t):  s/lambda - eps <= t <= lambda*s + eps.  Lambda is minimized
/// first, then eps; a lambda qualifies if its eps fits under `cap`.
inline QuasiParams lattice_fit(const std::vector<std::pair<Rat, Rat>>& samples,
                               const Rat& cap) {
    QuasiParams last;
    for (const Rat& lam : lambda_lattice()) {
        Rat need = 0;
        for (const auto& [s, t] : samples) {
            Rat lo = s / lam - t;  // lower-bound violation
            Rat hi = t - lam * s;  // upper-bound violation
            if (lo > need) need = lo;
            if (hi > need) need = hi;
        }
        Rat eps = lattice_ceil(need);
        last = {lam, eps, eps <= cap};
        if (last.within_cap) return last;
    }
    return last;  // largest lattice lambda, eps over cap; flagged
}

}  // namespace detail

/// Minimal (lambda, eps) on the fixed search lattice such that the
/// parameterization of `p` by index satisfies the two-sided quasigeodesic
/// sandwich for all index pairs.
inline QuasiParams measure_quasigeodesic(const MetricGraph& g, const DottedPath& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) throw std::invalid_argument("empty path");
    for (int v : vs) g.check_vertex(v);
    const int m = static_cast<int>(vs.size());
    std::map<int, std::vector<std::optional<Rat>>> dist;
    for (int v : vs)
        if (!dist.count(v)) dist[v] = single_source_distances(g, v);
    std::vector<std::pair<Rat, Rat>> samples;
    Rat diam = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& d = dist[vs[i]][vs[j]];
            if (!d) throw std::invalid_argument("graph is not connected");
            if (*d > diam) diam = *d;
            // step bound sanity on consecutive entries
            if (j == i + 1 && p.step_bound > 0 && *d > p.step_bound)
                throw std::invalid_argument("path violates its step bound");
            samples.emplace_back(Rat(j - i), *d);
        }
    Rat cap = std::max(diam, Rat(m - 1));  // index span for degenerate paths
    return detail::lattice_fit(samples, cap);
}

/// K = max over a, a' in A and w in interval(a, a') of d(w, A). Bounds all
/// geodesics between points of A since the interval is their union.
inline Rat quasiconvexity_constant(const MetricGraph& g, const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("A empty");
    for (int v : a) g.check_vertex(v);
    auto da = multi_source_distances(g, a);
    std::map<int, std::vector<std::optional<Rat>>> dist;
    for (int v : a)
        if (!dist.count(v)) dist[v] = single_source_distances(g, v);
    Rat best = 0;
    const int n = g.vertex_count();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            const auto& du = dist[a[i]];
            const auto& dv = dist[a[j]];
            if (!du[a[j]]) throw std::invalid_argument("graph is not connected");
            const Rat total = *du[a[j]];
            for (int w = 0; w < n; ++w)
                if (du[w] && *du[w] + *dv[w] == total && *da[w] > best)
                    best = *da[w];
        }
    return best;
}

}  // namespace conelab

#endif
