#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cluscol/multigraph.hpp"
#include "support.hpp"

using namespace cluscol;
namespace ts = testsupport;

TEST_CASE("dense construction, degrees, neighbors") {
    Multigraph g = ts::path(3);
    CHECK(g.vertexCount() == 3);
    CHECK(g.edgeCount() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.maxDegree() == 2);
    CHECK(g.neighbors(1) == std::vector<VertexId>{0, 2});
    CHECK(g.maxVertexId() == 2);
    CHECK(g.maxEdgeId() == 1);
}

TEST_CASE("loops count twice, parallel edges kept") {
    Multigraph g(2, {{0, 1}, {0, 1}, {1, 1}});
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 4);
    CHECK(g.neighbors(1) == std::vector<VertexId>{0});
    CHECK(g.incidentEdges(1).size() == 3);  // the loop appears once
    CHECK(g.edge(2).isLoop());
}

TEST_CASE("explicit construction rejects bad ids") {
    CHECK_THROWS_AS(Multigraph({0, 0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph({-1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph({0, 1}, {EdgeRec{0, 0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph({0, 1}, {EdgeRec{0, 0, 1}, EdgeRec{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("explicit construction sorts and keeps ids") {
    Multigraph g({5, 2, 9}, {EdgeRec{7, 9, 2}, EdgeRec{3, 5, 2}});
    CHECK(g.vertices() == std::vector<VertexId>{2, 5, 9});
    CHECK(g.edges().front().id == 3);
    CHECK(g.edges().back().id == 7);
    CHECK(g.neighbors(2) == std::vector<VertexId>{5, 9});
}

TEST_CASE("components ordered by minimum vertex") {
    Multigraph g(5, {{3, 4}, {0, 1}});
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<VertexId>{0, 1});
    CHECK(comps[1] == std::vector<VertexId>{2});
    CHECK(comps[2] == std::vector<VertexId>{3, 4});
}

TEST_CASE("induced subgraph preserves ids") {
    Multigraph g = ts::cycle(4);
    Multigraph h = g.inducedSubgraph({1, 2, 3});
    CHECK(h.vertexCount() == 3);
    CHECK(h.edgeCount() == 2);
    CHECK(h.hasEdge(1));  // 1-2
    CHECK(h.hasEdge(2));  // 2-3
    CHECK_FALSE(h.hasEdge(0));
    CHECK_THROWS_AS(g.inducedSubgraph({7}), std::invalid_argument);
}

TEST_CASE("withoutEdges drops exactly the listed edges") {
    Multigraph g = ts::complete(4);
    Multigraph h = g.withoutEdges({0, 5});
    CHECK(h.edgeCount() == 4);
    CHECK_FALSE(h.hasEdge(0));
    CHECK(h.vertexCount() == 4);
    CHECK_THROWS_AS(g.withoutEdges({99}), std::invalid_argument);
}

TEST_CASE("make_edge_cut splits edges by side") {
    Multigraph g = ts::path(3);
    EdgeCut cut = make_edge_cut(g, {0});
    CHECK(cut.sideA == std::vector<VertexId>{0});
    CHECK(cut.sideB == std::vector<VertexId>{1, 2});
    CHECK(cut.crossing == std::vector<EdgeId>{0});
    CHECK(cut.order() == 1);
}

TEST_CASE("min cut finds the bridge and reports lex-min side") {
    // two triangles joined by a bridge 2-3
    Multigraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    EdgeCut cut = min_edge_cut(g);
    CHECK(cut.order() == 1);
    CHECK(cut.sideA == std::vector<VertexId>{0, 1, 2});
    CHECK(cut.crossing == std::vector<EdgeId>{6});
}

TEST_CASE("min cut on complete and disconnected graphs") {
    CHECK(min_edge_cut(ts::complete(4)).order() == 3);
    Multigraph two(2, {});
    CHECK(min_edge_cut(two).order() == 0);
    Multigraph one(1, {});
    CHECK_THROWS_AS(min_edge_cut(one), std::invalid_argument);
}

TEST_CASE("min cut matches bipartition brute force on random graphs") {
    std::mt19937 rng(20260822);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Multigraph g = ts::randomGraph(rng, n, n + static_cast<int>(rng() % (2 * n)));
        CHECK(min_edge_cut(g).order() == ts::bruteMinCutOrder(g));
    }
}
