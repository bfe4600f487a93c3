#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <conelab/cayley.hpp>
#include <conelab/shortest_paths.hpp>
#include <conelab/words.hpp>

#include <random>

using namespace conelab;

namespace {

Word random_word(std::mt19937_64& rng, const std::vector<char>& gens, int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
        char g = gens[rng() % gens.size()];
        w.push_back(rng() % 2 ? g : static_cast<char>(std::toupper(g)));
    }
    return w;
}

const std::map<char, Word> kPlasticPhi = {{'x', "y"}, {'y', "z"}, {'z', "xy"}};
const std::map<char, Word> kFastPhi = {{'x', "xy"}, {'y', "yz"}, {'z', "x"}};

}  // namespace

TEST_CASE("word primitives") {
    CHECK(free_reduce("xyYX") == "");
    CHECK(free_reduce("xyYz") == "xz");
    CHECK(invert_word("abC") == "cBA");
    CHECK(free_reduce(Word("ab") + invert_word("ab")) == "");
}

TEST_CASE("free group normal forms") {
    auto f2 = free_group(2);
    CHECK(f2.normal_form("xyY") == "x");
    CHECK(f2.normal_form("xXyY") == "");
    CHECK(f2.multiply("xy", "Yx") == "xx");
    CHECK(f2.inverse("xy") == "YX");
    CHECK(f2.is_identity(f2.multiply("xy", f2.inverse("xy"))));
}

TEST_CASE("free products of cyclics") {
    auto g = free_product_cyclic({2, 2});
    CHECK(g.normal_form("aab") == "b");
    CHECK(g.normal_form("aA") == "");
    CHECK(g.normal_form("A") == "a");  // order 2: inverse is itself
    CHECK(g.normal_form("abab") == "abab");

    auto h = free_product_cyclic({3, 0});
    CHECK(h.normal_form("aaaa") == "a");
    CHECK(h.normal_form("AA") == "a");    // a^-2 = a in C3
    CHECK(h.normal_form("bbBA") == "baa");  // b, then a^-1 = a^2 in C3
    CHECK(h.inverse("ab") == "Baa");       // (ab)^-1 = b^-1 a^-1 = B a^2
}

TEST_CASE("semidirect normal forms, pinned substitution") {
    auto g = semidirect_z_free({'x', 'y', 'z'}, kPlasticPhi);
    CHECK(g.normal_form("txT") == "y");   // t x t^-1 = phi(x)
    CHECK(g.normal_form("tyT") == "z");
    CHECK(g.normal_form("tzT") == "xy");
    CHECK(g.normal_form("Tyt") == "x");   // t^-1 y t = phi^-1(y)
    CHECK(g.normal_form("xt") == "tzX");  // x t = t phi^-1(x), phi^-1(x) = z x^-1
    CHECK(g.normal_form("tT") == "");
    CHECK(g.normal_form("ttxTT") == "z");

    SUBCASE("phi^-1 is a two-sided inverse on samples") {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 200; ++it) {
            Word w = free_reduce(random_word(rng, {'x', 'y', 'z'}, 6));
            CHECK(g.apply_phi(0, g.apply_phi(0, w, +1), -1) == w);
            CHECK(g.apply_phi(0, g.apply_phi(0, w, -1), +1) == w);
        }
    }

    SUBCASE("fiber membership and cosets") {
        CHECK(g.contains("fiber", "xyz"));
        CHECK(g.contains("fiber", "txTz"));
        CHECK_FALSE(g.contains("fiber", "t"));
        CHECK_FALSE(g.contains("fiber", "xt"));
        CHECK(g.coset_canonical(g.subgroup("fiber"), "xyt") == "t");
        CHECK(g.coset_canonical(g.subgroup("fiber"), "TTx") == "TT");
    }
}

TEST_CASE("fiber growth under iterated substitution (frozen)") {
    auto pinned = semidirect_z_free({'x', 'y', 'z'}, kPlasticPhi);
    std::vector<long long> expect_pinned = {1, 1, 1, 2, 2, 3, 4, 5, 7};
    Word w = "x";
    for (size_t k = 0; k < expect_pinned.size(); ++k) {
        CHECK(static_cast<long long>(w.size()) == expect_pinned[k]);
        w = pinned.apply_phi(0, w, +1);
    }

    auto fast = semidirect_z_free({'x', 'y', 'z'}, kFastPhi);
    std::vector<long long> expect_fast = {1, 2, 4, 7, 12, 21, 37, 65, 114};
    w = "x";
    for (size_t k = 0; k < expect_fast.size(); ++k) {
        CHECK(static_cast<long long>(w.size()) == expect_fast[k]);
        w = fast.apply_phi(0, w, +1);
    }
}

TEST_CASE("schema rejection") {
    CHECK_THROWS_AS(free_product_cyclic({2, 1}), SchemaError);
    CHECK_THROWS_AS(semidirect_z_free({'x', 'y'}, {{'x', "y"}, {'y', "Y"}}),
                    SchemaError);  // not injective: phi(y y) = e on the ball
    CHECK_THROWS_AS(semidirect_z_free({'x'}, {{'x', ""}}), SchemaError);
    auto g = free_group(2);
    CHECK_THROWS_AS(g.normal_form("q"), SchemaError);
}

TEST_CASE("normal form is idempotent and respects multiplication") {
    std::mt19937_64 rng(9);
    auto scenarios = std::vector<GroupScenario>{
        free_group(3), free_product_cyclic({2, 2, 2}),
        semidirect_z_free({'x', 'y', 'z'}, kFastPhi)};
    for (const auto& s : scenarios) {
        auto gens = s.generators();
        for (int it = 0; it < 300; ++it) {
            Word a = random_word(rng, gens, 1 + static_cast<int>(rng() % 8));
            Word b = random_word(rng, gens, 1 + static_cast<int>(rng() % 8));
            Word na = s.normal_form(a);
            CHECK(s.normal_form(na) == na);
            CHECK(s.multiply(na, s.normal_form(b)) == s.normal_form(a + b));
            CHECK(s.is_identity(s.multiply(a, s.inverse(a))));
        }
    }
}

TEST_CASE("amalgam over an identified generator") {
    // <a,b | a^2, b^2> *_<a> <c,d | c^2, d^2> with c identified to a
    auto left = free_product_cyclic({2, 2}, "ab");
    auto right = free_product_cyclic({2, 2}, "cd");
    auto am = amalgam(left, right, {{'a', 'c'}});
    const auto& g = am.merged;
    CHECK(g.factors().size() == 3);
    CHECK(substitute(am.substitution, "cdC") == "adA");
    CHECK(g.normal_form(substitute(am.substitution, "cc")) == "");

    CHECK(g.contains("left", "aba"));
    CHECK(g.contains("right", "ad"));
    CHECK_FALSE(g.contains("left", "d"));
    CHECK(g.contains("edge", "a"));
    CHECK_FALSE(g.contains("edge", "b"));

    CHECK(g.coset_canonical(g.subgroup("left"), "dab") == "d");
    CHECK(g.coset_canonical(g.subgroup("left"), "ab") == "");
    CHECK(g.coset_canonical(g.subgroup("edge"), "ba") == "b");

    SUBCASE("both vertex groups embed: no new collapses on a ball") {
        // words in one side reduce the same before and after merging
        std::mt19937_64 rng(15);
        for (int it = 0; it < 200; ++it) {
            Word w = random_word(rng, {'a', 'b'}, 1 + static_cast<int>(rng() % 6));
            CHECK(g.normal_form(w) == left.normal_form(w));
            Word v = random_word(rng, {'c', 'd'}, 1 + static_cast<int>(rng() % 6));
            CHECK(g.is_identity(substitute(am.substitution, v)) ==
                  right.is_identity(v));
        }
    }
}

TEST_CASE("cayley balls") {
    SUBCASE("free group sphere sizes 2r(2r-1)^{k-1}") {
        auto f2 = free_group(2);
        auto b1 = cayley_ball(f2, 1);
        CHECK(b1.graph.vertex_count() == 5);
        auto b3 = cayley_ball(f2, 3);
        CHECK(b3.graph.vertex_count() == 1 + 4 + 12 + 36);
        std::vector<int> sphere(4, 0);
        for (int d : b3.depth) ++sphere[d];
        CHECK(sphere == std::vector<int>{1, 4, 12, 36});
    }
    SUBCASE("infinite dihedral ball is an interval") {
        auto d = free_product_cyclic({2, 2});
        auto b = cayley_ball(d, 2);
        CHECK(b.graph.vertex_count() == 5);  // e, a, b, ab, ba
        CHECK(b.id.count("ab") == 1);
        CHECK(b.id.count("ba") == 1);
    }
    SUBCASE("C2*C2*C2*C2 radius 2") {
        auto g = free_product_cyclic({2, 2, 2, 2});
        CHECK(cayley_ball(g, 2).graph.vertex_count() == 17);  // 1 + 4 + 4*3
    }
    SUBCASE("depth equals graph distance from the identity") {
        auto g = free_product_cyclic({2, 3, 0});
        auto b = cayley_ball(g, 3);
        auto dist = single_source_distances(b.graph, 0);
        for (size_t i = 0; i < b.element.size(); ++i)
            if (b.depth[i] < b.radius)  // boundary layer may have shortcuts only
                CHECK(*dist[i] == b.depth[i]);
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(cayley_ball(free_group(2), 8, 100), BudgetError);
    }
}

TEST_CASE("coset graph balls") {
    SUBCASE("infinite dihedral modulo <a> is a ray") {
        auto d = free_product_cyclic({2, 2});
        Subgroup h{Subgroup::Kind::FactorUnion, {0}, -1};
        auto b = coset_graph_ball(d, h, d.generators(), 3);
        CHECK(b.element[0] == "");
        CHECK(b.id.count("b") == 1);
        CHECK(b.id.count("ab") == 1);
        CHECK(b.id.count("bab") == 1);
        CHECK(b.graph.vertex_count() == 4);  // e, b, ab, bab
    }
    SUBCASE("semidirect modulo fiber is the integer line") {
        auto g = semidirect_z_free({'x', 'y', 'z'}, kFastPhi);
        auto b = coset_graph_ball(g, g.subgroup("fiber"), g.generators(), 3);
        CHECK(b.graph.vertex_count() == 7);  // t^-3 .. t^3
        CHECK(*single_source_distances(b.graph, 0)[b.id.at("ttt")] == 3);
    }
}

TEST_CASE("subgroup size and torsion detection") {
    auto d = free_product_cyclic({2, 2});
    Subgroup a{Subgroup::Kind::FactorUnion, {0}, -1};
    Subgroup whole{Subgroup::Kind::FactorUnion, {0, 1}, -1};
    CHECK(subgroup_size(d, a) == 2);
    CHECK_FALSE(subgroup_size(d, whole).has_value());
    CHECK(has_finite_order(d, "a"));
    CHECK_FALSE(has_finite_order(d, "ab"));
    auto f = free_group(2);
    CHECK_FALSE(has_finite_order(f, "x"));
}

TEST_CASE("height probe") {
    SUBCASE("finite subgroups have height 0") {
        auto d = free_product_cyclic({2, 2});
        Subgroup a{Subgroup::Kind::FactorUnion, {0}, -1};
        CHECK(height_probe(d, a, 3).subgroup_finite);
        CHECK(height_probe(d, a, 3).height_lower_bound == 0);
    }
    SUBCASE("normal infinite subgroup: every coset conjugates into it") {
        auto g = semidirect_z_free({'x', 'y', 'z'}, kFastPhi);
        auto probe = height_probe(g, g.subgroup("fiber"), 2, 30000);
        CHECK_FALSE(probe.subgroup_finite);
        // all five t-cosets in the radius-2 ball fix the fiber by conjugation
        CHECK(probe.height_lower_bound == 5);
    }
    SUBCASE("free factor of a free group is malnormal-ish: low count") {
        auto f = free_group(2);
        Subgroup x{Subgroup::Kind::FactorUnion, {0}, -1};
        auto probe = height_probe(f, x, 2, 30000);
        CHECK(probe.height_lower_bound == 1);  // only the trivial coset
    }
}

TEST_CASE("ambient length by meet in the middle") {
    auto f = free_group(2);
    auto got = ambient_length(f, f.generators(), "xyxY", 4);
    REQUIRE(got.has_value());
    CHECK(got->length == 4);
    CHECK(got->exact);

    auto g = semidirect_z_free({'x', 'y', 'z'}, kFastPhi);
    // t x t^-1 = phi(x) = xy has length 2, not 3
    auto a = ambient_length(g, g.generators(), "xy", 3);
    REQUIRE(a.has_value());
    CHECK(a->length == 2);
}

TEST_CASE("distortion profile") {
    auto g = semidirect_z_free({'x', 'y', 'z'}, kFastPhi);
    auto rows = distortion_profile(g, 'x', 8, /*exact_up_to=*/3, 60000);
    REQUIRE(rows.size() == 9);
    std::vector<long long> fiber;
    for (const auto& r : rows) fiber.push_back(r.fiber_length);
    CHECK(fiber == std::vector<long long>{1, 2, 4, 7, 12, 21, 37, 65, 114});
    for (const auto& r : rows) CHECK(r.ambient_upper <= 2 * r.k + 1);
    for (int k = 0; k <= 3; ++k) {
        REQUIRE(rows[k].ambient.has_value());
        CHECK(*rows[k].ambient <= 2 * k + 1);
    }
    CHECK(rows[8].ratio > 3.0);
}
