#ifndef CONELAB_DEVELOPMENT_HPP
#define CONELAB_DEVELOPMENT_HPP

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cayley.hpp"
#include "quasi.hpp"
#include "shortest_paths.hpp"
#include "words.hpp"

namespace conelab {

/// Simple polygon of groups: n vertex groups around a polygon, each edge
/// group generated by one identified generator pair of its two endpoint
/// groups (possibly none, i.e. a trivial edge group), trivial face group,
/// no twisting.
struct PolygonOfGroups {
    int n_sides = 3;
    std::vector<GroupScenario> vertex_groups;  // size n_sides
    // edge i joins vertex i and vertex (i+1) % n_sides; each pair identifies
    // a generator of vertex i with a generator of vertex i+1
    std::vector<std::vector<std::pair<char, char>>> edge_identifications;
};

struct FundamentalGroup {
    GroupScenario group;  // subgroups "v0".."v{n-1}" and "e0".."e{n-1}"
    std::map<std::pair<int, char>, char> symbol_map;  // (vertex, local) -> merged
    int n_sides = 0;

    Word translate(int vertex, const Word& local) const {
        Word out;
        for (char c : local) {
            auto it = symbol_map.find({vertex, gen_of(c)});
            if (it == symbol_map.end())
                throw SchemaError(std::string("symbol '") + c +
                                  "' unknown in vertex group " + std::to_string(vertex));
            out.push_back(is_inverse_letter(c)
                              ? static_cast<char>(std::toupper(it->second))
                              : it->second);
        }
        return out;
    }
};

/// Pushes the polygon out to one free-product presentation by identifying
/// the edge generators. Identified generators must head cyclic factors of
/// equal order, so each local map is injective by construction; the trivial
/// face group forces the two edge subgroups at a vertex to meet trivially,
/// which here means they use disjoint factors.
inline FundamentalGroup fundamental_group(const PolygonOfGroups& p) {
    const int n = p.n_sides;
    if (n < 3 || static_cast<int>(p.vertex_groups.size()) != n ||
        static_cast<int>(p.edge_identifications.size()) != n)
        throw SchemaError("polygon needs n >= 3 sides with matching group lists");

    // union-find over (vertex, symbol)
    std::map<std::pair<int, char>, std::pair<int, char>> parent;
    std::function<std::pair<int, char>(std::pair<int, char>)> find =
        [&](std::pair<int, char> x) {
            while (parent.at(x) != x) x = parent.at(x);
            return x;
        };
    for (int i = 0; i < n; ++i)
        for (char g : p.vertex_groups[i].generators()) parent[{i, g}] = {i, g};
    for (int i = 0; i < n; ++i)
        for (auto [a, b] : p.edge_identifications[i]) {
            int j = (i + 1) % n;
            if (!parent.count({i, a}) || !parent.count({j, b}))
                throw SchemaError("edge identification uses unknown generators");
            parent[find({j, b})] = find({i, a});
        }

    std::vector<GroupScenario::Factor> factors;
    std::map<std::pair<int, char>, int> factor_index;  // class root -> factor
    std::map<std::pair<int, char>, char> symbol_map;
    std::map<std::string, Subgroup> subgroups;
    std::set<char> used_symbols;

    for (int i = 0; i < n; ++i) {
        Subgroup vi;
        for (const auto& f : p.vertex_groups[i].factors()) {
            if (auto* c = std::get_if<CyclicFactor>(&f)) {
                auto root = find({i, c->gen});
                auto it = factor_index.find(root);
                if (it == factor_index.end()) {
                    if (used_symbols.count(c->gen))
                        throw SchemaError(std::string("generator symbol '") +
                                          c->gen + "' reused across vertex groups");
                    used_symbols.insert(c->gen);
                    factors.push_back(CyclicFactor{c->gen, c->order});
                    it = factor_index
                             .emplace(root, static_cast<int>(factors.size()) - 1)
                             .first;
                } else if (std::get<CyclicFactor>(factors[it->second]).order !=
                           c->order) {
                    throw SchemaError("identified generators have different orders");
                }
                symbol_map[{i, c->gen}] =
                    std::get<CyclicFactor>(factors[it->second]).gen;
                vi.factor_indices.insert(it->second);
            } else {
                const auto& s = std::get<SemidirectFactor>(f);
                for (char g : s.free_gens)
                    if (find({i, g}) != std::make_pair(i, g))
                        throw SchemaError("identification into a semidirect factor");
                for (char g : s.free_gens) {
                    if (used_symbols.count(g))
                        throw SchemaError("generator symbol reused across vertex groups");
                    used_symbols.insert(g);
                    symbol_map[{i, g}] = g;
                }
                if (used_symbols.count(s.stable_letter))
                    throw SchemaError("generator symbol reused across vertex groups");
                used_symbols.insert(s.stable_letter);
                symbol_map[{i, s.stable_letter}] = s.stable_letter;
                factors.push_back(f);
                vi.factor_indices.insert(static_cast<int>(factors.size()) - 1);
            }
        }
        subgroups["v" + std::to_string(i)] = vi;
    }
    for (int i = 0; i < n; ++i) {
        Subgroup ei;
        for (auto [a, b] : p.edge_identifications[i])
            ei.factor_indices.insert(factor_index.at(find({i, a})));
        subgroups["e" + std::to_string(i)] = ei;
    }
    // trivial face group: the two edge subgroups at each vertex must meet
    // trivially, i.e. share no factor
    for (int i = 0; i < n; ++i) {
        const auto& e_in = subgroups["e" + std::to_string((i + n - 1) % n)];
        const auto& e_out = subgroups["e" + std::to_string(i)];
        for (int f : e_in.factor_indices)
            if (e_out.factor_indices.count(f))
                throw SchemaError(
                    "incident edge subgroups overlap beyond the trivial face group");
    }
    FundamentalGroup out{GroupScenario("Polygon", std::move(factors),
                                       std::move(subgroups)),
                         std::move(symbol_map), n};
    return out;
}

/// Finite chunk of the development's 1-skeleton: vertices are cosets g*G_v
/// for g in the word-metric ball of the given radius, labeled by the vertex
/// class; faces are corner tuples when collected.
struct DevelopmentBall {
    MetricGraph skeleton;
    struct Entry {
        std::string label;
        Word rep;
        int depth = 0;
        bool boundary_affected = false;
    };
    std::vector<Entry> registry;
    std::map<std::pair<std::string, Word>, int> vertex_id;
    std::vector<std::vector<int>> faces;
    int radius = 0;

    int id_of(const std::string& label, const Word& rep) const {
        auto it = vertex_id.find({label, rep});
        if (it == vertex_id.end())
            throw SchemaError("unmatched coset " + label + ":" + rep);
        return it->second;
    }
};

struct DevelopOptions {
    long long budget = 2500000;  // group elements enumerated
    bool collect_faces = true;
    long long face_budget = 100000;
};

/// Shared builder: enumerate the group ball, take vertex-class cosets as
/// skeleton vertices, and join the corners seen from each group element
/// (each element contributes one copy of the polygon).
inline DevelopmentBall develop_ball(
    const GroupScenario& g,
    const std::vector<std::pair<std::string, Subgroup>>& vertex_classes,
    const std::vector<std::pair<int, int>>& polygon_edges, int radius,
    const DevelopOptions& opt = {}) {
    if (radius < 0) throw SchemaError("ball radius must be >= 0");
    DevelopmentBall b;
    b.radius = radius;
    const int k = static_cast<int>(vertex_classes.size());
    std::vector<std::unordered_map<Word, int>> ids(k);
    std::vector<std::pair<int, int>> raw_edges;
    std::set<std::vector<int>> face_set;

    auto letters = detail::signed_letters(g.generators());
    std::unordered_map<Word, int> seen;  // element -> depth
    std::deque<Word> queue{Word()};
    seen[Word()] = 0;
    std::vector<int> corners(k);
    while (!queue.empty()) {
        Word w = queue.front();
        queue.pop_front();
        int d = seen.at(w);
        for (int c = 0; c < k; ++c) {
            Word rep = g.coset_canonical(vertex_classes[c].second, w);
            auto it = ids[c].find(rep);
            if (it == ids[c].end()) {
                int v = static_cast<int>(b.registry.size());
                ids[c].emplace(rep, v);
                b.registry.push_back(
                    {vertex_classes[c].first, rep, d, d >= radius - 1});
                b.vertex_id[{vertex_classes[c].first, rep}] = v;
                corners[c] = v;
            } else {
                corners[c] = it->second;
            }
        }
        for (auto [i, j] : polygon_edges)
            raw_edges.emplace_back(std::min(corners[i], corners[j]),
                                   std::max(corners[i], corners[j]));
        if (opt.collect_faces &&
            static_cast<long long>(face_set.size()) < opt.face_budget)
            face_set.insert(corners);
        if (d < radius) {
            for (char c : letters) {
                Word nw = g.normal_form(w + Word(1, c));
                if (seen.emplace(nw, d + 1).second) {
                    if (static_cast<long long>(seen.size()) > opt.budget)
                        throw BudgetError("development ball exceeds the element budget");
                    queue.push_back(nw);
                }
            }
        }
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()),
                    raw_edges.end());
    std::vector<MetricGraph::Edge> edges;
    edges.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges)
        if (u != v) edges.push_back({u, v, Rat(1)});
    b.skeleton = MetricGraph(static_cast<int>(b.registry.size()), std::move(edges));
    if (opt.collect_faces) b.faces.assign(face_set.begin(), face_set.end());
    return b;
}

inline DevelopmentBall development_ball(const FundamentalGroup& fg, int radius,
                                        const DevelopOptions& opt = {}) {
    std::vector<std::pair<std::string, Subgroup>> classes;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < fg.n_sides; ++i) {
        classes.emplace_back("v" + std::to_string(i),
                             fg.group.subgroup("v" + std::to_string(i)));
        edges.emplace_back(i, (i + 1) % fg.n_sides);
    }
    return develop_ball(fg.group, classes, edges, radius, opt);
}

inline DevelopmentBall development_ball(const PolygonOfGroups& p, int radius,
                                        const DevelopOptions& opt = {}) {
    return development_ball(fundamental_group(p), radius, opt);
}

/// Bass-Serre tree ball for an amalgam scenario (subgroups "left", "right");
/// asserts acyclicity of the result.
inline DevelopmentBall build_bass_serre_ball(const GroupScenario& am, int radius,
                                             const DevelopOptions& opt = {}) {
    DevelopmentBall b = develop_ball(
        am, {{"left", am.subgroup("left")}, {"right", am.subgroup("right")}},
        {{0, 1}}, radius, opt);
    auto diag = validate(b.skeleton);
    if (!diag.connected ||
        static_cast<int>(b.skeleton.edges().size()) != b.skeleton.vertex_count() - 1)
        throw InternalError("Bass-Serre ball is not a tree");
    return b;
}

// ---- B1 -> B comparison -------------------------------------------------

struct EmbeddingRow {
    int src_a = 0, src_b = 0;  // registry ids in the source ball
    long long d_src = 0;
    long long d_dst = 0;
    bool boundary_affected = false;
};

struct PropernessProfile {
    std::vector<long long> rho;  // rho[M] = max d_src over rows with d_dst <= M
    bool non_proper = false;     // rho(M) reaches the source radius for M <= 2
};

struct EmbeddingProfile {
    std::vector<EmbeddingRow> rows;
    PropernessProfile properness;
};

/// Maps a source registry entry to a (label, rep) key of the target ball.
using VertexCorrespondence =
    std::function<std::pair<std::string, Word>(const DevelopmentBall::Entry&)>;

namespace detail {

inline std::vector<long long> unit_distances(const MetricGraph& g, int src) {
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

}  // namespace detail

inline EmbeddingProfile embedding_profile(
    const DevelopmentBall& src, const DevelopmentBall& dst,
    const VertexCorrespondence& f,
    std::vector<std::pair<int, int>> pairs = {}) {
    const int n = static_cast<int>(src.registry.size());
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) {
        auto key = f(src.registry[i]);
        image[i] = dst.id_of(key.first, key.second);
    }
    if (pairs.empty()) {
        if (n > 400)
            throw SchemaError("source ball too large for all-pairs; pass a sample");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::map<int, std::vector<long long>> dsrc, ddst;
    EmbeddingProfile out;
    for (auto [a, b] : pairs) {
        src.skeleton.check_vertex(a);
        src.skeleton.check_vertex(b);
        if (!dsrc.count(a)) dsrc[a] = detail::unit_distances(src.skeleton, a);
        if (!ddst.count(image[a]))
            ddst[image[a]] = detail::unit_distances(dst.skeleton, image[a]);
        long long ds = dsrc[a][b], dd = ddst[image[a]][image[b]];
        if (ds < 0 || dd < 0) throw InternalError("disconnected development ball");
        EmbeddingRow row{a, b, ds, dd,
                         src.registry[a].boundary_affected ||
                             src.registry[b].boundary_affected ||
                             ds >= src.radius - 1 || dd >= dst.radius - 1};
        out.rows.push_back(row);
    }
    long long max_dd = 0;
    for (const auto& r : out.rows) max_dd = std::max(max_dd, r.d_dst);
    out.properness.rho.assign(static_cast<size_t>(max_dd) + 1, 0);
    for (const auto& r : out.rows) {
        auto& cell = out.properness.rho[static_cast<size_t>(r.d_dst)];
        cell = std::max(cell, r.d_src);
    }
    for (size_t m = 1; m < out.properness.rho.size(); ++m)
        out.properness.rho[m] =
            std::max(out.properness.rho[m], out.properness.rho[m - 1]);
    for (size_t m = 0; m < out.properness.rho.size() && m <= 2; ++m)
        if (out.properness.rho[m] >= src.radius - 1) out.properness.non_proper = true;
    return out;
}

// ---- coned Cayley graph vs development ----------------------------------

/// Builds the Cayley ball coned along every vertex-subgroup coset, maps each
/// group element to its v0-coset in the development, and measures the
/// (lambda, eps) of that map over pairs clear of the boundary annulus.
struct ConedCayleyComparison {
    QuasiParams params;
    int sampled_pairs = 0;
};

inline ConedCayleyComparison coned_cayley_vs_development(
    const FundamentalGroup& fg, int radius, long long budget = 300000,
    int max_sources = 80) {
    auto ball = cayley_ball(fg.group, radius, budget);
    // coset members inside the ball, one coned set per coset
    std::vector<std::vector<int>> sets;
    for (int i = 0; i < fg.n_sides; ++i) {
        const auto& sub = fg.group.subgroup("v" + std::to_string(i));
        std::unordered_map<Word, std::vector<int>> members;
        for (size_t v = 0; v < ball.element.size(); ++v)
            members[fg.group.coset_canonical(sub, ball.element[v])].push_back(
                static_cast<int>(v));
        for (auto& [rep, vs] : members)
            if (vs.size() > 1) sets.push_back(vs);
    }
    std::vector<MetricGraph::Edge> edges = ball.graph.edges();
    int extra = ball.graph.vertex_count();
    for (const auto& s : sets) {
        for (int v : s) edges.push_back({extra, v, Rat(1)});
        ++extra;
    }
    MetricGraph coned(extra, std::move(edges));

    auto dev = development_ball(fg, radius, DevelopOptions{budget, false, 0});
    const auto& v0 = fg.group.subgroup("v0");
    std::vector<int> image(ball.element.size());
    for (size_t v = 0; v < ball.element.size(); ++v)
        image[v] = dev.id_of("v0", fg.group.coset_canonical(v0, ball.element[v]));

    std::vector<int> eligible;
    for (size_t v = 0; v < ball.element.size(); ++v)
        if (ball.depth[v] <= radius - 2) eligible.push_back(static_cast<int>(v));
    std::vector<std::pair<Rat, Rat>> samples;
    Rat cap = 0;
    int nsrc = std::min<int>(max_sources, static_cast<int>(eligible.size()));
    for (int si = 0; si < nsrc; ++si) {
        int s = eligible[si];
        auto dh = detail::unit_distances(coned, s);
        auto db = detail::unit_distances(dev.skeleton, image[s]);
        for (int t : eligible) {
            if (t <= s) continue;
            samples.emplace_back(Rat(dh[t]), Rat(db[image[t]]));
            cap = std::max(cap, std::max(Rat(dh[t]), Rat(db[image[t]])));
        }
    }
    ConedCayleyComparison out;
    out.sampled_pairs = static_cast<int>(samples.size());
    out.params = detail::lattice_fit(samples, std::max(cap, Rat(1)));
    return out;
}

// ---- two-edge geodesic check --------------------------------------------

struct ConcatVerdict {
    std::array<int, 3> triple{};
    long long skeleton_distance = 0;
    bool distinct_faces = false;  // the two edges lie in two different faces
                                  // meeting only at the middle vertex
    std::string verdict;          // "geodesic", "shortcut", "not applicable"
};

inline std::vector<ConcatVerdict> edge_concat_check(
    const DevelopmentBall& b, const std::vector<std::array<int, 3>>& triples) {
    std::vector<ConcatVerdict> out;
    for (const auto& t : triples) {
        for (int v : t) b.skeleton.check_vertex(v);
        if (!(b.skeleton.adjacent(t[0], t[1]) && b.skeleton.adjacent(t[1], t[2])))
            throw SchemaError("triple is not a 2-edge skeleton path");
        ConcatVerdict cv;
        cv.triple = t;
        if (t[0] == t[2]) {
            cv.verdict = "not applicable";
            out.push_back(cv);
            continue;
        }
        auto d = detail::unit_distances(b.skeleton, t[0]);
        cv.skeleton_distance = d[t[2]];
        cv.verdict = cv.skeleton_distance == 2 ? "geodesic" : "shortcut";
        std::vector<const std::vector<int>*> first, second;
        for (const auto& face : b.faces) {
            bool has0 = false, has1 = false, has2 = false;
            for (int v : face) {
                has0 |= v == t[0];
                has1 |= v == t[1];
                has2 |= v == t[2];
            }
            if (has0 && has1) first.push_back(&face);
            if (has1 && has2) second.push_back(&face);
        }
        for (const auto* fa : first)
            for (const auto* fb : second) {
                if (fa == fb) continue;
                std::vector<int> sa = *fa, sb = *fb, common;
                std::sort(sa.begin(), sa.end());
                std::sort(sb.begin(), sb.end());
                std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                      std::back_inserter(common));
                if (common == std::vector<int>{t[1]}) cv.distinct_faces = true;
            }
        out.push_back(cv);
    }
    return out;
}

/// Registry CSV: vertex-id, face-label, coset-representative, depth, flag.
inline std::string registry_csv(const DevelopmentBall& b) {
    std::string out = "vertex_id,label,coset_rep,depth,boundary_affected\n";
    for (size_t i = 0; i < b.registry.size(); ++i) {
        const auto& e = b.registry[i];
        out += std::to_string(i) + "," + e.label + "," + e.rep + "," +
               std::to_string(e.depth) + "," + (e.boundary_affected ? "1" : "0") +
               "\n";
    }
    return out;
}

}  // namespace conelab

#endif
