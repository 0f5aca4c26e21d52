#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cluscol/coloring.hpp"
#include "cluscol/multigraph.hpp"
#include "support.hpp"

using namespace cluscol;
namespace ts = testsupport;

TEST_CASE("palette is enforced on assignment") {
    Coloring c(2);
    c.assign(0, 2);
    CHECK(c.color(0) == 2);
    CHECK_THROWS_AS(c.assign(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(c.assign(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(c.color(5), std::invalid_argument);
    CHECK_THROWS_AS(c.setPaletteSize(1), std::invalid_argument);
    c.setPaletteSize(7);
    CHECK(c.paletteSize() == 7);
}

TEST_CASE("verify_clustering failure modes") {
    Multigraph g = ts::path(3);
    Coloring partial(2);
    partial.assign(0, 1);
    CHECK_FALSE(verify_clustering(g, partial, 2, 5).ok);

    Coloring wide(3, {{0, 1}, {1, 2}, {2, 3}});
    ClusteringReport rep = verify_clustering(g, wide, 2, 5);
    CHECK_FALSE(rep.ok);
    CHECK(rep.problem.find("palette") != std::string::npos);

    Coloring mono(1, {{0, 1}, {1, 1}, {2, 1}});
    rep = verify_clustering(g, mono, 1, 2);
    CHECK_FALSE(rep.ok);
    CHECK(rep.worstComponentSize == 3);
    CHECK(rep.witness == std::vector<VertexId>{0, 1, 2});
    CHECK(verify_clustering(g, mono, 1, 3).ok);
}

TEST_CASE("loops never create an oversized component") {
    Multigraph g(1, {{0, 0}});
    Coloring c(1, {{0, 1}});
    CHECK(verify_clustering(g, c, 1, 1).ok);
}

TEST_CASE("merge across a single-edge cut permutes side A") {
    Multigraph g(2, {{0, 1}});
    EdgeCut cut = make_edge_cut(g, {0});
    Coloring cA(2, {{0, 1}});
    Coloring cB(2, {{1, 1}});
    Coloring merged = merge_across_cut(g, cut, cA, cB, 2, 1);
    CHECK(merged.color(0) == 2);
    CHECK(merged.color(1) == 1);
    CHECK(verify_clustering(g, merged, 2, 1).ok);
}

TEST_CASE("merge rejects a cut as wide as the palette") {
    Multigraph g(2, {{0, 1}});
    EdgeCut cut = make_edge_cut(g, {0});
    Coloring cA(1, {{0, 1}});
    Coloring cB(1, {{1, 1}});
    CHECK_THROWS_AS(merge_across_cut(g, cut, cA, cB, 1, 1), std::invalid_argument);
}

TEST_CASE("merged clustering equals the larger input clustering") {
    std::mt19937 rng(4401);
    for (int trial = 0; trial < 40; ++trial) {
        int nA = 1 + static_cast<int>(rng() % 4);
        int nB = 1 + static_cast<int>(rng() % 4);
        int n = nA + nB;
        int k = 3 + static_cast<int>(rng() % 3);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i < 2 * n; ++i) {
            int u = static_cast<int>(rng() % static_cast<unsigned>(n));
            int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (u == v) continue;
            bool crossing = (u < nA) != (v < nA);
            int already = 0;
            for (auto& [a, b] : edges) already += ((a < nA) != (b < nA));
            if (crossing && already >= k - 1) continue;
            edges.push_back({u, v});
        }
        Multigraph g(n, edges);
        std::vector<VertexId> sideA;
        for (int v = 0; v < nA; ++v) sideA.push_back(v);
        EdgeCut cut = make_edge_cut(g, sideA);
        Coloring cA(k), cB(k);
        for (int v = 0; v < n; ++v)
            (v < nA ? cA : cB).assign(v, 1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
        long long worstA =
            verify_clustering(g.inducedSubgraph(cut.sideA), cA, k, n).worstComponentSize;
        long long worstB =
            verify_clustering(g.inducedSubgraph(cut.sideB), cB, k, n).worstComponentSize;
        long long bound = std::max(worstA, worstB);
        Coloring merged = merge_across_cut(g, cut, cA, cB, k, bound);
        ClusteringReport rep = verify_clustering(g, merged, k, bound);
        CHECK(rep.ok);
        CHECK(rep.worstComponentSize == bound);
    }
}

TEST_CASE("rebound after re-adding deleted edges") {
    Multigraph g = ts::complete(3);
    Multigraph gPrime = g.withoutEdges({2});  // two edges remain
    Coloring c(2, {{0, 1}, {1, 2}, {2, 1}});
    CHECK(rebound_after_extra_edges(g, gPrime, c, 2) == 4);
    Coloring mono(2, {{0, 1}, {1, 1}, {2, 1}});
    CHECK_THROWS_AS(rebound_after_extra_edges(g, gPrime, mono, 1), std::invalid_argument);
}
