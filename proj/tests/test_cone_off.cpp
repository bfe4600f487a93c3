#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <conelab/cone_off.hpp>

#include "oracles.hpp"

using namespace conelab;

TEST_CASE("cone_off basic shape") {
    auto p10 = path_graph(10);

    SUBCASE("no sets: extended is the base") {
        auto cg = cone_off(p10, {});
        CHECK(cg.extended.vertex_count() == 10);
        CHECK(distance(cg.extended, 0, 9) == 9);
    }

    SUBCASE("coning everything gives diameter 2") {
        std::vector<int> all;
        for (int i = 0; i < 10; ++i) all.push_back(i);
        auto cg = cone_off(p10, {all});
        for (int u = 0; u < 10; ++u)
            for (int v = 0; v < 10; ++v)
                CHECK(distance(cg.extended, u, v) <= 2);
    }

    SUBCASE("electric shortcut on C12") {
        auto cg = cone_off(cycle_graph(12), {{0, 6}});
        CHECK(distance(cg.extended, 0, 6) == 2);
        CHECK(distance(cg.base, 0, 6) == 6);
        CHECK(cg.base_delta.has_value());
        CHECK(cg.base_delta->delta == delta_four_point(cycle_graph(12)).delta);
        CHECK(*cg.max_qc_constant == 3);  // interval(0,6) is the whole cycle
    }

    SUBCASE("errors") {
        CHECK_THROWS(cone_off(p10, {{}}));
        CHECK_THROWS(cone_off(p10, {{3, 99}}));
    }
}

TEST_CASE("coned sets have extended diameter <= 2, and inclusion is distance-nonincreasing") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 15; ++it) {
        int n = 8 + static_cast<int>(rng() % 20);
        auto g = oracle::random_connected_graph(rng, n, 4);
        std::vector<std::vector<int>> sets;
        for (int s = 0; s < 2; ++s) {
            std::set<int> a;
            int m = 2 + static_cast<int>(rng() % 4);
            for (int i = 0; i < m; ++i) a.insert(static_cast<int>(rng() % n));
            sets.push_back({a.begin(), a.end()});
        }
        ConeOffOptions opt;
        opt.measure_metadata = false;
        auto cg = cone_off(g, sets, opt);
        for (size_t s = 0; s < sets.size(); ++s)
            for (int a : sets[s])
                for (int b : sets[s])
                    CHECK(distance(cg.extended, a, b) <= 2);
        for (int u = 0; u < n; ++u) {
            auto de = single_source_distances(cg.extended, u);
            auto db = single_source_distances(g, u);
            for (int v = 0; v < n; ++v) CHECK(*de[v] <= *db[v]);
        }
    }
}

TEST_CASE("electric_path") {
    auto cg = cone_off(cycle_graph(12), {{0, 6}});
    auto ep = electric_path(cg, 0, 0, 6);
    CHECK(ep.vertices == std::vector<int>{0, cg.cone_vertex(0), 6});
    CHECK(ep.length == 2);
    auto deg = electric_path(cg, 0, 6, 6);  // degenerate but valid
    CHECK(deg.length == 2);
    CHECK_THROWS(electric_path(cg, 0, 1, 6));
}

TEST_CASE("de_electrify") {
    SUBCASE("path entirely in base is unchanged") {
        auto cg = cone_off(path_graph(10), {{2, 3, 4, 5, 6, 7}});
        auto dp = de_electrify(cg, {0, 1, 2, 3});
        CHECK(dp.vertices == std::vector<int>{0, 1, 2, 3});
    }

    SUBCASE("interval coned set on P10") {
        auto cg = cone_off(path_graph(10), {{2, 3, 4, 5, 6, 7}});
        int c = cg.cone_vertex(0);
        auto dp = de_electrify(cg, {0, 1, 2, c, 7, 8});
        CHECK(dp.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
        CHECK(dp.step_bound == 1);
    }

    SUBCASE("sparse coned set on C12") {
        auto cg = cone_off(cycle_graph(12), {{0, 6}});
        int c = cg.cone_vertex(0);
        auto dp = de_electrify(cg, {0, c, 6});
        CHECK(dp.vertices.front() == 0);
        CHECK(dp.vertices.back() == 6);
        for (int v : dp.vertices) CHECK(v < 12);
        CHECK(dp.step_bound == 6);  // projection jumps across the sparse set
        CHECK(quasiconvexity_constant(cg.base, {0, 6}) == 3);
    }

    SUBCASE("errors") {
        auto cg = cone_off(cycle_graph(12), {{0, 6}});
        int c = cg.cone_vertex(0);
        CHECK_THROWS(de_electrify(cg, {c, 0}));
        CHECK_THROWS(de_electrify(cg, {0, 2, 4}));  // not a path
    }

    SUBCASE("endpoints preserved, no cone vertices (random family)") {
        std::mt19937_64 rng(23);
        for (int it = 0; it < 10; ++it) {
            auto t = oracle::random_tree(rng, 20);
            std::set<int> a;
            for (int i = 0; i < 5; ++i) a.insert(static_cast<int>(rng() % 20));
            ConeOffOptions opt;
            opt.measure_metadata = false;
            auto cg = cone_off(t, {{a.begin(), a.end()}}, opt);
            int x = static_cast<int>(rng() % 20), y = static_cast<int>(rng() % 20);
            auto geo = geodesic(cg.extended, x, y);
            auto dp = de_electrify(cg, geo.vertices);
            CHECK(dp.vertices.front() == x);
            CHECK(dp.vertices.back() == y);
            for (int v : dp.vertices) CHECK_FALSE(cg.is_cone_vertex(v));
        }
    }
}

TEST_CASE("lambda_0 calibration") {
    auto cg = cone_off(cycle_graph(12), {{0, 6}});
    Rat lam = calibrate_dotted_path_constant(cg, {{0, 6}, {1, 5}, {3, 9}});
    CHECK(lam == *cg.dotted_path_constant);
    CHECK(lam >= 1);
}

TEST_CASE("compare_cone_offs") {
    auto c20 = cycle_graph(20);
    SUBCASE("identical sets give the identity fit") {
        auto cmp = compare_cone_offs(c20, {{0, 10}}, {{0, 10}});
        CHECK(cmp.max_hausdorff == 0);
        CHECK(cmp.params.lambda == 1);
        CHECK(cmp.params.eps == 0);
    }
    SUBCASE("neighborhood enlargement stays close") {
        std::vector<int> a = {0, 10};
        std::vector<int> b = {0, 1, 10, 11};  // one adjacent vertex added
        auto cmp = compare_cone_offs(c20, {a}, {b});
        CHECK(cmp.max_hausdorff <= 1);
        CHECK(cmp.params.lambda <= 2);
        CHECK(cmp.params.eps <= 3);
    }
    SUBCASE("radius-2 neighborhood on C20") {
        std::vector<int> a = {0, 10};
        std::vector<int> b = {18, 19, 0, 1, 2, 8, 9, 10, 11, 12};
        auto cmp = compare_cone_offs(c20, {a}, {b});
        CHECK(cmp.max_hausdorff == 2);
        CHECK(cmp.params.within_cap);
    }
    CHECK_THROWS(compare_cone_offs(c20, {{0}}, {}));
}

TEST_CASE("fellow_travel_stats") {
    auto cg = cone_off(cycle_graph(12), {{0, 6}});
    auto rows = fellow_travel_stats(cg, {{3, 9}, {1, 5}, {2, 4}});
    CHECK(rows[0].hausdorff_extended == 0);  // both tie-breaks pick the same side
    CHECK(rows[1].hausdorff_extended == 2);  // extended route goes through the cone
    CHECK(rows[2].hausdorff_extended == 0);  // no coned set in the way
}

TEST_CASE("coned trees keep small four-point delta (family)") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 8; ++it) {
        int n = 30 + static_cast<int>(rng() % 40);
        auto t = oracle::random_tree(rng, n);
        // coned subtrees of radius <= 2
        std::vector<std::vector<int>> sets;
        for (int s = 0; s < 3; ++s) {
            int center = static_cast<int>(rng() % n);
            auto d = single_source_distances(t, center);
            std::vector<int> ball;
            for (int v = 0; v < n; ++v)
                if (*d[v] <= 2) ball.push_back(v);
            sets.push_back(ball);
        }
        ConeOffOptions opt;
        opt.measure_metadata = false;
        auto cg = cone_off(t, sets, opt);
        CHECK(delta_four_point(cg.extended).delta <= 2);
    }
}

TEST_CASE("quasiconvexity persists under coning (family)") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 8; ++it) {
        int n = 30 + static_cast<int>(rng() % 40);
        auto t = oracle::random_tree(rng, n);
        auto q = geodesic(t, 0, n - 1).vertices;  // geodesic segment: 0-quasiconvex
        std::vector<std::vector<int>> sets;
        for (int s = 0; s < 3; ++s) {
            int center = static_cast<int>(rng() % n);
            auto d = single_source_distances(t, center);
            std::vector<int> ball;
            for (int v = 0; v < n; ++v)
                if (*d[v] <= 2) ball.push_back(v);
            sets.push_back(ball);
        }
        ConeOffOptions opt;
        opt.measure_metadata = false;
        auto cg = cone_off(t, sets, opt);
        CHECK(quasiconvexity_constant(cg.extended, q) <= 2);
    }
}

TEST_CASE("attach_horoballs") {
    SUBCASE("two points at distance 2, depth 1: layer-1 points joined") {
        auto p3 = path_graph(3);
        auto h = attach_horoballs(p3, {{0, 2}}, 1);
        CHECK(h.graph.vertex_count() == 5);
        CHECK(h.graph.adjacent(3, 4));  // 2^1 >= 2
    }
    SUBCASE("singleton set hangs a path") {
        auto p3 = path_graph(3);
        auto h = attach_horoballs(p3, {{1}}, 4);
        CHECK(h.graph.vertex_count() == 7);
        CHECK(distance(h.graph, 1, 6) == 4);
    }
    SUBCASE("distance 8 pair shortcuts through layer 3") {
        auto p9 = path_graph(9);
        auto h = attach_horoballs(p9, {{0, 8}}, 4);
        // up 3, across (2^3 >= 8), down 3: frozen from the layered-graph oracle
        CHECK(distance(h.graph, 0, 8) == 7);
    }
    CHECK_THROWS(attach_horoballs(path_graph(3), {{0}}, 0));
}
