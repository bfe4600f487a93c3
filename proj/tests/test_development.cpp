#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <conelab/development.hpp>

using namespace conelab;

namespace {

// Triangle of groups: v0 = <a,b | a^2, b^2>, v1 = <c,d | c^2, d^2>,
// v2 = <x,y,z | x^2, y^2, z^2>, edge identifications c=a, y=d, x=b.
PolygonOfGroups triangle_557() {
    PolygonOfGroups p;
    p.n_sides = 3;
    p.vertex_groups = {free_product_cyclic({2, 2}, "ab"),
                       free_product_cyclic({2, 2}, "cd"),
                       free_product_cyclic({2, 2, 2}, "xyz")};
    p.edge_identifications = {{{'a', 'c'}}, {{'d', 'y'}}, {{'x', 'b'}}};
    return p;
}

// The sub-amalgam <a,b> *_<a> <c,d> of the same triangle.
AmalgamScenario amalgam_557() {
    return amalgam(free_product_cyclic({2, 2}, "ab"),
                   free_product_cyclic({2, 2}, "cd"), {{'a', 'c'}});
}

Word db_power(int n) {
    Word w;
    for (int i = 0; i < n; ++i) w += "db";
    return w;
}

}  // namespace

TEST_CASE("fundamental group of the triangle") {
    auto fg = fundamental_group(triangle_557());
    CHECK(fg.group.factors().size() == 4);  // a, b, d, z merged
    CHECK(fg.symbol_map.at({1, 'c'}) == 'a');
    CHECK(fg.symbol_map.at({2, 'x'}) == 'b');
    CHECK(fg.symbol_map.at({2, 'y'}) == 'd');
    CHECK(fg.translate(1, "cdC") == "adA");
    CHECK(fg.group.is_identity(fg.translate(2, "xx")));

    CHECK(fg.group.contains("v0", "aba"));
    CHECK_FALSE(fg.group.contains("v0", "d"));
    CHECK(fg.group.contains("v2", "bdz"));
    CHECK(fg.group.contains("e0", "a"));
    CHECK_FALSE(fg.group.contains("e0", "b"));
    // (db)^n lies in v2 under the identifications x=b, y=d
    for (int n = 1; n <= 4; ++n)
        CHECK(fg.group.coset_canonical(fg.group.subgroup("v2"), db_power(n)) == "");
}

TEST_CASE("fundamental group schema rejection") {
    auto p = triangle_557();
    SUBCASE("order mismatch on an identified pair") {
        p.vertex_groups[1] = free_product_cyclic({3, 2}, "cd");
        CHECK_THROWS_AS(fundamental_group(p), SchemaError);
    }
    SUBCASE("incident edge subgroups overlapping (nontrivial face)") {
        p.edge_identifications = {{{'a', 'c'}}, {{'c', 'x'}}, {{'x', 'b'}}};
        // classes {a,c,x,b} collapse: e2 and e0 share the merged factor
        CHECK_THROWS_AS(fundamental_group(p), SchemaError);
    }
    SUBCASE("wrong list sizes") {
        p.edge_identifications.pop_back();
        CHECK_THROWS_AS(fundamental_group(p), SchemaError);
    }
}

TEST_CASE("development ball of the all-trivial square is one square") {
    PolygonOfGroups p;
    p.n_sides = 4;
    for (int i = 0; i < 4; ++i)
        p.vertex_groups.push_back(GroupScenario("Trivial", {}));
    p.edge_identifications.assign(4, {});
    auto b = development_ball(p, 2);
    CHECK(b.skeleton.vertex_count() == 4);
    CHECK(b.skeleton.edges().size() == 4);
    CHECK(b.faces.size() == 1);
    CHECK(distance(b.skeleton, b.id_of("v0", ""), b.id_of("v2", "")) == 2);
}

TEST_CASE("development ball reproduces the two-step pattern") {
    auto fg = fundamental_group(triangle_557());
    auto b = development_ball(fg, 6);
    int v = b.id_of("v0", "");
    int mid = b.id_of("v2", "");
    CHECK(b.skeleton.adjacent(v, mid));  // joined through the e2 edge-coset
    for (int n = 1; n <= 2; ++n) {
        int wn = b.id_of("v1", db_power(n));
        CHECK(distance(b.skeleton, v, wn) == 2);
        CHECK(b.skeleton.adjacent(mid, wn));
    }
    // the coset registry is injective on cosets: same coset, same id
    CHECK(b.id_of("v2", "") ==
          b.id_of("v2", fg.group.coset_canonical(fg.group.subgroup("v2"), "dbdb")));
    CHECK_THROWS_AS(development_ball(fg, 6, DevelopOptions{10, false, 0}),
                    BudgetError);
}

TEST_CASE("bass-serre ball of the infinite dihedral free product is a line") {
    auto am = amalgam(free_product_cyclic({2}, "a"), free_product_cyclic({2}, "b"),
                      {});
    auto b = build_bass_serre_ball(am.merged, 3);
    // biregular of degrees |C2| = 2 on both sides: a line segment
    for (int v = 0; v < b.skeleton.vertex_count(); ++v)
        CHECK(b.skeleton.neighbors(v).size() <= 2);
    CHECK(b.skeleton.edges().size() ==
          static_cast<size_t>(b.skeleton.vertex_count() - 1));
}

TEST_CASE("bass-serre distances for the amalgam over <a>") {
    auto am = amalgam_557();
    auto b = build_bass_serre_ball(am.merged, 6);
    int v = b.id_of("left", "");
    CHECK(distance(b.skeleton, v, b.id_of("right", "")) == 1);
    // (db)^n splits into 2n syllables alternating right/left, none in <a>,
    // giving tree distance 2n+1
    CHECK(distance(b.skeleton, v, b.id_of("right", db_power(1))) == 3);
    CHECK(distance(b.skeleton, v, b.id_of("right", db_power(2))) == 5);
    CHECK(distance(b.skeleton, v, b.id_of("right", db_power(3))) == 7);
}

TEST_CASE("one-dimensional development equals the bass-serre ball") {
    auto am = amalgam_557();
    auto direct = develop_ball(
        am.merged,
        {{"left", am.merged.subgroup("left")}, {"right", am.merged.subgroup("right")}},
        {{0, 1}}, 4);
    auto tree = build_bass_serre_ball(am.merged, 4);
    REQUIRE(direct.registry.size() == tree.registry.size());
    for (size_t i = 0; i < direct.registry.size(); ++i) {
        CHECK(direct.registry[i].label == tree.registry[i].label);
        CHECK(direct.registry[i].rep == tree.registry[i].rep);
    }
    CHECK(direct.skeleton.edges().size() == tree.skeleton.edges().size());
}

TEST_CASE("embedding profile of the identity is the diagonal") {
    auto am = amalgam(free_product_cyclic({2}, "a"), free_product_cyclic({2}, "b"),
                      {});
    auto b = build_bass_serre_ball(am.merged, 4);
    auto prof = embedding_profile(
        b, b, [](const DevelopmentBall::Entry& e) {
            return std::make_pair(e.label, e.rep);
        });
    for (const auto& r : prof.rows) CHECK(r.d_src == r.d_dst);
    for (size_t m = 0; m < prof.properness.rho.size(); ++m)
        CHECK(prof.properness.rho[m] == static_cast<long long>(m));
    CHECK_FALSE(prof.properness.non_proper);
}

TEST_CASE("embedding profile detects the non-proper tree-to-development map") {
    auto am = amalgam_557();
    auto b1 = build_bass_serre_ball(am.merged, 6);
    auto fg = fundamental_group(triangle_557());
    auto b = development_ball(fg, 6, DevelopOptions{2500000, false, 0});
    VertexCorrespondence f = [](const DevelopmentBall::Entry& e) {
        return std::make_pair(std::string(e.label == "left" ? "v0" : "v1"), e.rep);
    };
    std::vector<std::pair<int, int>> pairs;
    int v = b1.id_of("left", "");
    for (int n = 1; n <= 2; ++n) pairs.emplace_back(v, b1.id_of("right", db_power(n)));
    auto prof = embedding_profile(b1, b, f, pairs);
    REQUIRE(prof.rows.size() == 2);
    CHECK(prof.rows[0].d_src == 3);
    CHECK(prof.rows[1].d_src == 5);
    CHECK(prof.rows[0].d_dst == 2);
    CHECK(prof.rows[1].d_dst == 2);
    CHECK(prof.properness.non_proper);  // rho(2) already reaches the radius

    SUBCASE("unmatched coset is rejected") {
        VertexCorrespondence bad = [](const DevelopmentBall::Entry& e) {
            return std::make_pair(std::string("v0"), Word("zzz") + e.rep);
        };
        CHECK_THROWS_AS(embedding_profile(b1, b, bad, pairs), SchemaError);
    }
}

TEST_CASE("coned cayley graph vs development skeleton") {
    SUBCASE("all-trivial polygon degenerates to a point") {
        PolygonOfGroups p;
        p.n_sides = 3;
        for (int i = 0; i < 3; ++i)
            p.vertex_groups.push_back(GroupScenario("Trivial", {}));
        p.edge_identifications.assign(3, {});
        auto cmp = coned_cayley_vs_development(fundamental_group(p), 3);
        CHECK(cmp.params.lambda == 1);
        CHECK(cmp.params.eps == 0);
    }
    SUBCASE("triangle of groups: bounded params across radii") {
        auto fg = fundamental_group(triangle_557());
        for (int radius = 3; radius <= 5; ++radius) {
            auto cmp = coned_cayley_vs_development(fg, radius);
            CHECK(cmp.params.within_cap);
            CHECK(cmp.params.lambda <= 2);
            CHECK(cmp.params.eps <= 4);
        }
    }
}

TEST_CASE("two-edge concatenation check") {
    SUBCASE("inside one trivial-groups face") {
        PolygonOfGroups p;
        p.n_sides = 4;
        for (int i = 0; i < 4; ++i)
            p.vertex_groups.push_back(GroupScenario("Trivial", {}));
        p.edge_identifications.assign(4, {});
        auto b = development_ball(p, 1);
        auto vs = edge_concat_check(
            b, {{b.id_of("v0", ""), b.id_of("v1", ""), b.id_of("v2", "")}});
        CHECK(vs[0].skeleton_distance == 2);
        CHECK(vs[0].verdict == "geodesic");
        CHECK_FALSE(vs[0].distinct_faces);  // the shortcut exists only off-skeleton
    }
    SUBCASE("across two faces meeting at the middle vertex") {
        auto b = development_ball(fundamental_group(triangle_557()), 4);
        int b1 = b.id_of("v0", ""), mid = b.id_of("v2", ""), b2 = b.id_of("v1", "db");
        auto vs = edge_concat_check(b, {{b1, mid, b2}, {b1, mid, b1}});
        CHECK(vs[0].verdict == "geodesic");
        CHECK(vs[0].skeleton_distance == 2);
        CHECK(vs[0].distinct_faces);
        CHECK(vs[1].verdict == "not applicable");
        CHECK_THROWS_AS(edge_concat_check(b, {{b1, b1, b2}}), SchemaError);
    }
}

TEST_CASE("registry csv export") {
    auto am = amalgam(free_product_cyclic({2}, "a"), free_product_cyclic({2}, "b"),
                      {});
    auto b = build_bass_serre_ball(am.merged, 2);
    auto csv = registry_csv(b);
    CHECK(csv.rfind("vertex_id,label,coset_rep,depth,boundary_affected\n", 0) == 0);
    CHECK(csv.find("0,left,,0,0") != std::string::npos);
    CHECK(registry_csv(b) == csv);  // deterministic
}
