#ifndef CONELAB_SCENARIO_HPP
#define CONELAB_SCENARIO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boundary.hpp"
#include "cayley.hpp"
#include "cone_off.hpp"
#include "development.hpp"
#include "hyperbolicity.hpp"
#include "io.hpp"
#include "quasi.hpp"

namespace conelab {

// ---------------------------------------------------------------------------
// artifacts and digests

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Artifact {
    std::string path;  // relative to the output directory
    std::size_t bytes = 0;
    std::string digest;
};

/// Collects artifact files for one scenario run and records their digests.
class ScenarioSink {
public:
    explicit ScenarioSink(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    void emit(const std::string& name, const std::string& content) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw SchemaError("cannot write artifact " + name);
        out << content;
        artifacts_.push_back({name, content.size(), hex64(fnv1a64(content))});
    }

    const std::vector<Artifact>& artifacts() const { return artifacts_; }
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::vector<Artifact> artifacts_;
};

struct ScenarioSettings {
    std::optional<std::uint64_t> seed;          // overrides the scenario's seed
    std::optional<long long> budget_vertices;   // caps enumeration budgets
};

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

template <class T>
T param(const json& p, const std::string& key, T fallback) {
    if (p.contains(key)) return p.at(key).get<T>();
    return fallback;
}

inline long long enum_budget(const ScenarioSettings& st, long long fallback) {
    if (st.budget_vertices) return std::min(*st.budget_vertices, fallback);
    return fallback;
}

// uniform random attachment tree on n vertices, unit edge lengths
inline MetricGraph random_tree(int n, std::mt19937_64& rng) {
    std::vector<MetricGraph::Edge> es;
    for (int i = 1; i < n; ++i)
        es.push_back({static_cast<int>(rng() % i), i, Rat(1)});
    return MetricGraph(n, es);
}

inline std::vector<int> unit_ball_set(const MetricGraph& g, int center,
                                      int radius) {
    auto d = unit_distances(g, center);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d[v] >= 0 && d[v] <= radius) out.push_back(v);
    return out;
}

// deepest-vertex path from the root of a unit tree
inline std::vector<int> deepest_path(const MetricGraph& g, int root) {
    auto d = unit_distances(g, root);
    int far = root;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d[v] > d[far]) far = v;
    std::vector<int> path{far};
    while (path.back() != root) {
        int cur = path.back();
        for (const auto& [nb, len] : g.neighbors(cur))
            if (d[nb] == d[cur] - 1) {
                path.push_back(nb);
                break;
            }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// bundled model builders

/// Triangle of groups with C2*C2 at two corners, C2*C2*C2 at the third, and
/// one generator identified along each side (c=a, y=d, x=b).
inline PolygonOfGroups bundled_triangle() {
    PolygonOfGroups p;
    p.n_sides = 3;
    p.vertex_groups = {free_product_cyclic({2, 2}, "ab"),
                       free_product_cyclic({2, 2}, "cd"),
                       free_product_cyclic({2, 2, 2}, "xyz")};
    p.edge_identifications = {{{'a', 'c'}}, {{'d', 'y'}}, {{'x', 'b'}}};
    return p;
}

/// The sub-amalgam <a,b> *_<a> <c,d> of the same triangle.
inline AmalgamScenario bundled_triangle_amalgam() {
    return amalgam(free_product_cyclic({2, 2}, "ab"),
                   free_product_cyclic({2, 2}, "cd"), {{'a', 'c'}});
}

inline Word alternating_word(int n) {
    Word w;
    for (int i = 0; i < n; ++i) w += "db";
    return w;
}

// ---------------------------------------------------------------------------
// pipeline steps

namespace steps {

inline void triangle_distances(const json& p, const ScenarioSettings& st,
                               ScenarioSink& sink) {
    const int n_max = detail::param(p, "n_max", 3);
    const int dev_radius = detail::param(p, "dev_radius", 2 * n_max + 2);
    const int tree_radius = detail::param(p, "tree_radius", 2 * n_max + 3);
    const long long budget = detail::enum_budget(st, 2500000);

    auto fg = fundamental_group(bundled_triangle());
    auto dev = development_ball(fg, dev_radius, DevelopOptions{budget, false, 0});
    auto am = bundled_triangle_amalgam();
    auto tree = build_bass_serre_ball(am.merged, tree_radius,
                                      DevelopOptions{budget, false, 0});

    const int v_dev = dev.id_of("v0", "");
    const int v_tree = tree.id_of("left", "");
    std::ostringstream csv;
    csv << "n,word,d_tree,d_development,boundary_affected\n";
    bool all_two = true, linear = true;
    for (int n = 1; n <= n_max; ++n) {
        Word wn = alternating_word(n);
        int wd = dev.id_of("v1", wn);
        int wt = tree.id_of("right", wn);
        Rat d_dev = distance(dev.skeleton, v_dev, wd);
        Rat d_tree = distance(tree.skeleton, v_tree, wt);
        bool edge = dev.registry[wd].boundary_affected ||
                    tree.registry[wt].boundary_affected;
        all_two = all_two && d_dev == 2;
        linear = linear && d_tree == 2 * n + 1;
        csv << n << "," << wn << "," << rat_to_string(d_tree) << ","
            << rat_to_string(d_dev) << "," << (edge ? 1 : 0) << "\n";
    }
    sink.emit("wn_distances.csv", csv.str());

    // tree distance for letter-count prefixes of the alternating word
    std::ostringstream lcsv;
    lcsv << "letters,word,d_tree,matches_letters_plus_1\n";
    bool even_match = true;
    Word full = alternating_word(n_max);
    for (int len = 1; len <= 2 * n_max; ++len) {
        Word u = full.substr(0, len);
        Word rep = am.merged.coset_canonical(am.merged.subgroup("right"), u);
        Rat d = distance(tree.skeleton, v_tree, tree.id_of("right", rep));
        bool match = d == len + 1;
        if (len % 2 == 0) even_match = even_match && match;
        lcsv << len << "," << u << "," << rat_to_string(d) << ","
             << (match ? 1 : 0) << "\n";
    }
    sink.emit("letter_prefixes.csv", lcsv.str());

    json summary;
    summary["development_distance_all_two"] = all_two;
    summary["tree_distance_is_2n_plus_1_in_syllable_blocks"] = linear;
    summary["even_letter_prefixes_match_letters_plus_1"] = even_match;
    summary["matching_letter_convention"] =
        "counting letters of the alternating word (even prefix lengths)";
    sink.emit("summary.json", summary.dump(2) + "\n");
}

inline void fiber_distortion(const json& p, const ScenarioSettings& st,
                             ScenarioSink& sink) {
    const int k_max = detail::param(p, "k_max", 8);
    const int exact_up_to = detail::param(p, "exact_up_to", 3);
    const long long budget = detail::enum_budget(st, 300000);

    struct Case {
        std::string label;
        std::map<char, Word> phi;
    };
    const std::vector<Case> cases = {
        {"x:y y:z z:xy", {{'x', "y"}, {'y', "z"}, {'z', "xy"}}},
        {"x:xy y:yz z:x", {{'x', "xy"}, {'y', "yz"}, {'z', "x"}}},
    };

    std::ostringstream csv;
    csv << "substitution,k,fiber_length,ambient_upper,ambient_exact,ratio\n";
    json summary = json::object();
    for (const auto& c : cases) {
        auto s = semidirect_z_free({'x', 'y', 'z'}, c.phi);
        auto rows = distortion_profile(s, 'x', k_max, exact_up_to, budget);
        bool increasing = true;
        for (size_t i = 1; i < rows.size(); ++i)
            increasing = increasing && rows[i].fiber_length > rows[i - 1].fiber_length;
        for (const auto& r : rows) {
            csv << c.label << "," << r.k << "," << r.fiber_length << ","
                << r.ambient_upper << ","
                << (r.ambient ? std::to_string(*r.ambient) : std::string()) << ","
                << detail::fmt_double(r.ratio) << "\n";
        }
        json verdict;
        verdict["fiber_strictly_increasing"] = increasing;
        verdict["ratio_at_k_max"] = detail::fmt_double(rows.back().ratio);
        verdict["ratio_exceeds_3"] = rows.back().ratio > 3.0;
        summary[c.label] = verdict;
    }
    sink.emit("distortion.csv", csv.str());
    sink.emit("summary.json", summary.dump(2) + "\n");
}

struct TreeInstance {
    MetricGraph tree;
    std::vector<std::vector<int>> cone_sets;
};

inline TreeInstance tree_cone_instance(int size, int n_sets, int max_radius,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TreeInstance inst{detail::random_tree(size, rng), {}};
    for (int i = 0; i < n_sets; ++i) {
        int center = static_cast<int>(rng() % size);
        int radius = 1 + static_cast<int>(rng() % max_radius);
        inst.cone_sets.push_back(detail::unit_ball_set(inst.tree, center, radius));
    }
    return inst;
}

inline std::uint64_t require_seed(const ScenarioSettings& st, const json& budgets) {
    if (st.seed) return *st.seed;
    if (budgets.contains("seed")) return budgets.at("seed").get<std::uint64_t>();
    throw SchemaError("this scenario samples randomly and needs a seed");
}

inline void tree_cone_deltas(const json& p, const ScenarioSettings& st,
                             ScenarioSink& sink, std::uint64_t seed) {
    const auto sizes = detail::param<std::vector<int>>(
        p, "sizes", {50, 120, 200, 300, 400});
    const int n_sets = detail::param(p, "cone_sets", 5);
    const int max_radius = detail::param(p, "cone_radius", 3);
    const int exhaustive = detail::param(p, "delta_exhaustive_budget", 120);
    const std::uint64_t samples = detail::param<std::uint64_t>(
        p, "delta_samples", 200000);

    std::ostringstream csv;
    csv << "instance,size,extended_vertices,delta,exact,sampled_quadruples\n";
    Rat max_delta = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        auto inst = tree_cone_instance(sizes[i], n_sets, max_radius,
                                       seed + 0x9e3779b97f4a7c15ULL * i);
        auto cg = cone_off(inst.tree, inst.cone_sets,
                           ConeOffOptions{false, {}, std::nullopt, 0});
        DeltaResult res =
            cg.extended.vertex_count() <= exhaustive
                ? delta_four_point(cg.extended, DeltaOptions{exhaustive})
                : delta_four_point_sampled(cg.extended, samples, seed + i);
        if (res.delta > max_delta) max_delta = res.delta;
        csv << i << "," << sizes[i] << "," << cg.extended.vertex_count() << ","
            << rat_to_string(res.delta) << "," << (res.exact ? 1 : 0) << ","
            << res.sampled_quadruples << "\n";
    }
    sink.emit("delta_table.csv", csv.str());
    json summary;
    summary["max_delta"] = rat_to_string(max_delta);
    summary["instances"] = sizes.size();
    sink.emit("summary.json", summary.dump(2) + "\n");
}

inline void tree_cone_quasiconvexity(const json& p, const ScenarioSettings& st,
                                     ScenarioSink& sink, std::uint64_t seed) {
    const auto sizes = detail::param<std::vector<int>>(
        p, "sizes", {50, 120, 200, 300, 400});
    const int n_sets = detail::param(p, "cone_sets", 5);
    const int max_radius = detail::param(p, "cone_radius", 3);

    std::ostringstream csv;
    csv << "instance,size,segment_length,qc_constant\n";
    Rat max_k = 0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        auto inst = tree_cone_instance(sizes[i], n_sets, max_radius,
                                       seed + 0x9e3779b97f4a7c15ULL * i);
        auto cg = cone_off(inst.tree, inst.cone_sets,
                           ConeOffOptions{false, {}, std::nullopt, 0});
        auto q = detail::deepest_path(inst.tree, 0);
        Rat k = quasiconvexity_constant(cg.extended, q);
        if (k > max_k) max_k = k;
        csv << i << "," << sizes[i] << "," << q.size() - 1 << ","
            << rat_to_string(k) << "\n";
    }
    sink.emit("qc_table.csv", csv.str());
    json summary;
    summary["max_qc_constant"] = rat_to_string(max_k);
    summary["instances"] = sizes.size();
    sink.emit("summary.json", summary.dump(2) + "\n");
}

inline void mitra_tables(const json& p, const ScenarioSettings& st,
                         ScenarioSink& sink) {
    const int path_n = detail::param(p, "path_n", 9);
    const int branch_depth = detail::param(p, "branch_depth", 6);
    const int radius = detail::param(p, "radius", 7);
    const long long budget = detail::enum_budget(st, 2500000);

    std::ostringstream csv;
    csv << "case,N,M\n";
    auto append = [&csv](const std::string& label, const MitraProfile& prof) {
        for (size_t n = 0; n < prof.table.size(); ++n)
            csv << label << "," << n << "," << rat_to_string(prof.table[n])
                << "\n";
    };

    // identity embedding of a path
    auto path = path_graph(path_n);
    std::vector<int> id(path_n);
    for (int i = 0; i < path_n; ++i) id[i] = i;
    auto ident = mitra_profile(path, path, id, 0, path_n - 1);
    append("identity", ident);
    bool ident_exact = true;
    for (size_t n = 0; n < ident.table.size(); ++n)
        ident_exact = ident_exact && ident.table[n] == static_cast<long long>(n);

    // isometric branch of a two-branch tree
    std::vector<MetricGraph::Edge> es;
    es.push_back({0, 1, Rat(1)});
    es.push_back({0, branch_depth + 1, Rat(1)});
    for (int i = 1; i < branch_depth; ++i) {
        es.push_back({i, i + 1, Rat(1)});
        es.push_back({branch_depth + i, branch_depth + i + 1, Rat(1)});
    }
    MetricGraph two_branch(2 * branch_depth + 1, es);
    auto branch_path = path_graph(branch_depth + 1);
    std::vector<int> into_branch(branch_depth + 1);
    for (int i = 0; i <= branch_depth; ++i) into_branch[i] = i;
    auto sub = mitra_profile(branch_path, two_branch, into_branch, 0, branch_depth);
    append("subtree", sub);
    bool sub_ge = true;
    for (size_t n = 0; n < sub.table.size(); ++n)
        sub_ge = sub_ge && sub.table[n] >= static_cast<long long>(n);

    // the amalgam tree inside the triangle development
    auto am = bundled_triangle_amalgam();
    auto tree = build_bass_serre_ball(am.merged, radius,
                                      DevelopOptions{budget, false, 0});
    auto fg = fundamental_group(bundled_triangle());
    auto dev = development_ball(fg, radius, DevelopOptions{budget, false, 0});
    std::vector<int> f(tree.registry.size());
    for (size_t i = 0; i < tree.registry.size(); ++i) {
        const auto& e = tree.registry[i];
        f[i] = dev.id_of(e.label == "left" ? "v0" : "v1", e.rep);
    }
    auto tri = mitra_profile(tree.skeleton, dev.skeleton, f,
                             tree.id_of("left", ""), radius);
    append("triangle-embedding", tri);
    bool stalls = true;
    for (size_t n = 3; n < tri.table.size(); ++n)
        stalls = stalls && tri.table[n] <= 2;

    sink.emit("mitra_tables.csv", csv.str());
    json summary;
    summary["identity_profile_is_exact"] = ident_exact;
    summary["subtree_profile_at_least_N"] = sub_ge;
    summary["triangle_embedding_stalls_at_2"] = stalls;
    summary["triangle_table_length"] = tri.table.size();
    sink.emit("summary.json", summary.dump(2) + "\n");
}

}  // namespace steps

// ---------------------------------------------------------------------------
// scenario registry and runner

inline const std::vector<std::string>& bundled_scenario_names() {
    static const std::vector<std::string> names = {
        "example-5-7", "example-5-8-distortion", "tree-cone-family",
        "cone-qc-persistence", "mitra-isometric-vs-5-7"};
    return names;
}

inline json bundled_scenario(const std::string& name) {
    json sc;
    sc["name"] = name;
    if (name == "example-5-7") {
        sc["pipeline"] = {{{"op", "triangle-distances"}, {"params", json::object()}}};
    } else if (name == "example-5-8-distortion") {
        sc["pipeline"] = {{{"op", "fiber-distortion"}, {"params", json::object()}}};
    } else if (name == "tree-cone-family") {
        sc["budgets"] = {{"seed", 1}};
        sc["pipeline"] = {{{"op", "tree-cone-deltas"}, {"params", json::object()}}};
    } else if (name == "cone-qc-persistence") {
        sc["budgets"] = {{"seed", 1}};
        sc["pipeline"] = {
            {{"op", "tree-cone-quasiconvexity"}, {"params", json::object()}}};
    } else if (name == "mitra-isometric-vs-5-7") {
        sc["pipeline"] = {{{"op", "mitra-tables"}, {"params", json::object()}}};
    } else {
        throw SchemaError("unknown bundled scenario \"" + name + "\"");
    }
    return sc;
}

inline bool is_bundled_scenario(const std::string& name) {
    const auto& ns = bundled_scenario_names();
    return std::find(ns.begin(), ns.end(), name) != ns.end();
}

/// Runs a scenario into `out_dir` and returns the manifest (also written as
/// manifest.json). Artifacts are byte-deterministic given (scenario, seed).
inline json run_scenario(const json& sc, const std::filesystem::path& out_dir,
                         const ScenarioSettings& st = {}) {
    if (!sc.is_object() || !sc.contains("name") || !sc.at("name").is_string())
        throw SchemaError("scenario JSON needs a string \"name\"");
    json pipeline = sc.value("pipeline", json::array());
    if (!pipeline.is_array())
        throw SchemaError("scenario \"pipeline\" must be an array");
    json budgets = sc.value("budgets", json::object());

    ScenarioSink sink(out_dir);
    std::optional<std::uint64_t> used_seed;
    for (const auto& step : pipeline) {
        if (!step.is_object() || !step.contains("op"))
            throw SchemaError("pipeline steps need an \"op\" field");
        std::string op = step.at("op").get<std::string>();
        json params = step.value("params", json::object());
        if (op == "triangle-distances") {
            steps::triangle_distances(params, st, sink);
        } else if (op == "fiber-distortion") {
            steps::fiber_distortion(params, st, sink);
        } else if (op == "tree-cone-deltas") {
            std::uint64_t seed = steps::require_seed(st, budgets);
            used_seed = seed;
            steps::tree_cone_deltas(params, st, sink, seed);
        } else if (op == "tree-cone-quasiconvexity") {
            std::uint64_t seed = steps::require_seed(st, budgets);
            used_seed = seed;
            steps::tree_cone_quasiconvexity(params, st, sink, seed);
        } else if (op == "mitra-tables") {
            steps::mitra_tables(params, st, sink);
        } else {
            throw SchemaError("unknown pipeline op \"" + op + "\"");
        }
    }

    json manifest;
    manifest["scenario"] = sc.at("name").get<std::string>();
    if (used_seed) manifest["seed"] = *used_seed;
    auto arts = sink.artifacts();
    std::sort(arts.begin(), arts.end(),
              [](const Artifact& a, const Artifact& b) { return a.path < b.path; });
    manifest["artifacts"] = json::array();
    for (const auto& a : arts)
        manifest["artifacts"].push_back(
            {{"path", a.path}, {"bytes", a.bytes}, {"digest", a.digest}});
    std::ofstream mf(out_dir / "manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";
    return manifest;
}

// ---------------------------------------------------------------------------
// op documentation for the CLI

inline const std::map<std::string, std::string>& op_descriptions() {
    static const std::map<std::string, std::string> docs = {
        {"gromov_product",
         "gromov_product(graph, base, a, b) -> exact rational "
         "(d(base,a)+d(base,b)-d(a,b))/2."},
        {"delta_four_point",
         "delta_four_point(graph[, exhaustive_budget]) -> four-point "
         "hyperbolicity constant; exact up to the vertex budget, seeded "
         "sampled lower bound above it."},
        {"polygon_slimness",
         "polygon_slimness(graph, corners) -> max over sides of the distance "
         "to the union of the other sides."},
        {"cone_off",
         "cone_off(graph, sets[, options]) -> base + extended graph with one "
         "cone vertex per set, unit edges to every member."},
        {"electric_path",
         "electric_path(coned, set_id, x, x') -> the two-hop cone detour "
         "between members of one coned set (length 2)."},
        {"de_electrify",
         "de_electrify(coned, path) -> dotted path replacing each cone hop by "
         "a geodesic inside the coned set."},
        {"compare_cone_offs",
         "compare_cone_offs(graph, sets_a, sets_b) -> max Hausdorff distance "
         "between paired sets and the identity-map distortion cap."},
        {"fellow_travel_stats",
         "fellow_travel_stats(coned, pairs) -> per-pair Hausdorff distance "
         "(extended metric) between base and extended geodesics."},
        {"attach_horoballs",
         "attach_horoballs(graph, sets, depth) -> truncated combinatorial "
         "horoball over each set with geometrically shrinking levels."},
        {"interval",
         "interval(graph, u, v) -> all vertices on some geodesic from u to v "
         "(exact union of geodesics)."},
        {"geodesic",
         "geodesic(graph, u, v) -> one lexicographic tie-break geodesic."},
        {"hausdorff_distance",
         "hausdorff_distance(graph, s, t) -> exact Hausdorff distance between "
         "vertex sets."},
        {"quasiconvexity_constant",
         "quasiconvexity_constant(graph, a) -> max distance from any "
         "geodesic between points of a back to a."},
        {"measure_quasigeodesic",
         "measure_quasigeodesic(graph, dotted_path) -> smallest lattice "
         "(lambda, eps) making the path a quasigeodesic."},
        {"normal_form",
         "normal_form(scenario, word) -> canonical form in the free product "
         "or semidirect scenario; idempotent and multiplicative."},
        {"cayley_ball",
         "cayley_ball(scenario, radius) -> metric ball in the Cayley graph "
         "with canonical words on the vertices."},
        {"coset_graph_ball",
         "coset_graph_ball(scenario, subgroup, radius) -> ball in the graph "
         "on left cosets under the left action."},
        {"subgroup_size",
         "subgroup_size(scenario, subgroup) -> exact order when the subgroup "
         "saturates within budget, empty for infinite."},
        {"has_finite_order",
         "has_finite_order(scenario, word) -> exact torsion test via cyclic "
         "reduction."},
        {"height_probe",
         "height_probe(scenario, subgroup, radius) -> lower bound on the "
         "number of conjugates sharing an infinite-order element."},
        {"ambient_length",
         "ambient_length(scenario, gens, word, bound) -> word length via "
         "meet-in-the-middle ball search; flagged exact when certified."},
        {"distortion_profile",
         "distortion_profile(scenario, seed_letter, k_max) -> fiber length "
         "vs ambient length of iterated substitution images."},
        {"fundamental_group",
         "fundamental_group(polygon) -> merged free-product presentation "
         "with vertex/edge subgroups and the symbol translation map."},
        {"development_ball",
         "development_ball(polygon|group, radius) -> finite ball of the "
         "development: vertex-class cosets, polygon edges, face list."},
        {"build_bass_serre_ball",
         "build_bass_serre_ball(amalgam, radius) -> ball of the Bass-Serre "
         "tree on left/right vertex-group cosets."},
        {"embedding_profile",
         "embedding_profile(src_ball, dst_ball, correspondence) -> distance "
         "pairs and the properness gauge rho."},
        {"coned_cayley_vs_development",
         "coned_cayley_vs_development(group, radius) -> quasi-isometry "
         "parameters between the coned Cayley ball and the development "
         "skeleton."},
        {"edge_concat_check",
         "edge_concat_check(ball, triples) -> geodesic/shortcut verdicts for "
         "two-edge concatenations through a middle vertex."},
        {"divergence_profile",
         "divergence_profile(graph, sequence, base) -> Gromov-product table "
         "with tail infima and a stall verdict."},
        {"classify_ray",
         "classify_ray(coned, prefix, window) -> horizontal / vertical / "
         "undetermined verdict for a geodesic prefix."},
        {"mitra_profile",
         "mitra_profile(y, x, f, y0, n_max) -> M(N) = least image distance "
         "over Y-geodesics avoiding the open N-ball at the basepoint."},
        {"ct_consistency_probe",
         "ct_consistency_probe(y, x, f, base, pairs) -> convergence of image "
         "Gromov products for converging source sequences."},
        {"limit_projection_growth",
         "limit_projection_growth(graph, a, prefix) -> nondecreasing "
         "projection-diameter curve of a ray prefix onto a set."},
        {"run",
         "run(scenario) -> executes a pipeline and writes CSV/JSON artifacts "
         "plus manifest.json with content digests."},
        {"list-scenarios", "list-scenarios -> the bundled scenario names."},
        {"describe", "describe(op) -> this contract text for a named op."},
    };
    return docs;
}

inline std::string describe_op(const std::string& name) {
    auto it = op_descriptions().find(name);
    if (it == op_descriptions().end())
        throw SchemaError("unknown op \"" + name + "\"");
    return it->second;
}

}  // namespace conelab

#endif
