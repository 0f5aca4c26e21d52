#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cluscol/oracle.hpp"
#include "support.hpp"

using namespace cluscol;
namespace ts = testsupport;

TEST_CASE("minimum clustered palette on the standard fixtures") {
    CHECK(min_clustered_colors(ts::cycle(4), 1) == 2);
    CHECK(min_clustered_colors(ts::complete(4), 1) == 4);
    CHECK(min_clustered_colors(ts::path(4), 2) == 2);
    CHECK(min_clustered_colors(ts::path(4), 4) == 1);
    CHECK(min_clustered_colors(Multigraph(), 1) == 1);
}

TEST_CASE("search order is canonical and the bound is respected") {
    auto found = find_clustered_coloring(ts::cycle(4), 2, 1);
    REQUIRE(found);
    CHECK(found->color(0) == 1);  // smallest vertex takes color 1
    CHECK(verify_clustering(ts::cycle(4), *found, 2, 1).ok);
    CHECK_FALSE(find_clustered_coloring(ts::complete(4), 3, 1));
}

TEST_CASE("parallel search matches the sequential result") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        Multigraph g = ts::randomGraph(rng, 6, 9);
        for (int k = 1; k <= 3; ++k) {
            auto seq = find_clustered_coloring(g, k, 1, 10, 1);
            auto par = find_clustered_coloring(g, k, 1, 10, 4);
            CHECK(seq.has_value() == par.has_value());
            if (seq && par)
                for (VertexId v : g.vertices()) CHECK(seq->color(v) == par->color(v));
        }
    }
}

TEST_CASE("color search rejects graphs above the cap") {
    CHECK_THROWS_AS(find_clustered_coloring(ts::path(11), 2, 1, 10), std::invalid_argument);
}

TEST_CASE("minimum palette never increases with the clustering bound") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        Multigraph g = ts::randomGraph(rng, 6, 10);
        int prev = min_clustered_colors(g, 1);
        for (long long n = 2; n <= 6; ++n) {
            int cur = min_clustered_colors(g, n);
            CHECK(cur <= prev);
            prev = cur;
        }
        CHECK(prev == 1);  // clustering |V| admits one color
    }
}

TEST_CASE("immersion fixtures") {
    Multigraph k3 = ts::complete(3);
    CHECK(has_immersion(ts::complete(4), k3));
    CHECK(has_immersion(ts::cycle(4), k3));
    CHECK_FALSE(has_immersion(ts::path(3), k3));
}

TEST_CASE("immersion witness paths are edge-disjoint") {
    auto w = has_immersion(ts::cycle(4), ts::complete(3));
    REQUIRE(w);
    std::set<EdgeId> used;
    size_t total = 0;
    for (const auto& [he, path] : w->pathMap) {
        for (EdgeId e : path) used.insert(e);
        total += path.size();
    }
    CHECK(used.size() == total);
}

TEST_CASE("a loop pattern needs a cycle through the image") {
    Multigraph loop(1, {{0, 0}});
    CHECK(has_immersion(ts::complete(3), loop));
    CHECK_FALSE(has_immersion(ts::path(3), loop));
    Multigraph gLoop(1, {{0, 0}});
    CHECK(has_immersion(gLoop, loop));
}

TEST_CASE("strong immersion implies the weak one") {
    auto strong = has_immersion(ts::complete(4), ts::complete(3), true);
    REQUIRE(strong);
    CHECK(strong->strong);
    CHECK(has_immersion(ts::complete(4), ts::complete(3), false));
}

TEST_CASE("immersion respects the size caps") {
    CHECK_THROWS_AS(has_immersion(ts::path(10), ts::path(2)), std::invalid_argument);
    OracleCaps caps;
    caps.immersionVertices = 10;
    CHECK(has_immersion(ts::path(10), ts::path(2), false, caps));
}

TEST_CASE("apex blocker shapes") {
    Multigraph star = gen_apex_blocker(Multigraph(1, {}), 2);
    CHECK(star.vertexCount() == 3);
    CHECK(star.edgeCount() == 2);
    CHECK(star.degree(2) == 2);

    Multigraph tri = gen_apex_blocker(ts::path(2), 1);
    CHECK(tri.vertexCount() == 3);
    CHECK(tri.edgeCount() == 3);
    CHECK(min_clustered_colors(tri, 1) == 3);
}

TEST_CASE("apex blocker has at most one high-degree vertex") {
    for (int eta = 1; eta <= 3; ++eta) {
        Multigraph q = gen_apex_blocker(ts::path(3), eta);
        CHECK(q.vertexCount() == 3 * eta + 1);
        int high = 0;
        for (VertexId v : q.vertices()) high += q.degree(v) >= 2 + 2;  // base max degree + 2
        CHECK(high <= 1);
    }
}

TEST_CASE("layered blocker shapes") {
    Multigraph tri = gen_layered_blocker(Multigraph(1, {}), 1);
    CHECK(tri.vertexCount() == 3);
    CHECK(tri.edgeCount() == 3);

    Multigraph two = gen_layered_blocker(Multigraph(1, {}), 2);
    CHECK(two.vertexCount() == 9);  // 3 path vertices + 2 layers of 3 copies
    // each layer copy joins both of its path ends
    CHECK(two.edgeCount() == 2 + 12);
}

TEST_CASE("layered blocker vertex count follows the formula") {
    for (long long n = 1; n <= 3; ++n) {
        Multigraph q = gen_layered_blocker(ts::path(2), n);
        CHECK(q.vertexCount() == (n + 1) + n * (2 * n - 1) * 2);
    }
}

TEST_CASE("layered blocker refuses absurd sizes") {
    CHECK_THROWS_AS(gen_layered_blocker(ts::complete(5), 500), std::invalid_argument);
}

TEST_CASE("degree-one component bound") {
    CHECK(degree_one_bound(2) == 1);
    CHECK(degree_one_bound(3) == 8);
    CHECK_FALSE(fitsInt64(degree_one_bound(20)));
}

TEST_CASE("degree-one check on a matching") {
    Multigraph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    DegreeOneCheck res = degree_one_check(matching, 3);
    CHECK(res.preconditionsHold);
    CHECK(res.ok);
    CHECK(res.largestComponent == 2);

    DegreeOneCheck longPath = degree_one_check(ts::path(5), 3);
    CHECK_FALSE(longPath.preconditionsHold);
}
