#include <doctest.h>

#include <stdexcept>
#include <string>

#include "cluscol/greedy_lift.hpp"
#include "cluscol/oracle.hpp"
#include "support.hpp"

using namespace cluscol;
namespace ts = testsupport;

namespace {

TreeCutDecomposition unitBagPath(int n) {
    TreeCutDecomposition tcd;
    tcd.tree = ts::path(n);
    for (int i = 0; i < n; ++i) tcd.bags[i] = {i};
    return tcd;
}

std::map<NodeId, int> unitKMap(int n, int k = 1) {
    std::map<NodeId, int> m;
    for (int i = 0; i < n; ++i) m[i] = k;
    return m;
}

}  // namespace

TEST_CASE("derived constants, small parameters") {
    LiftParameters p = derived_constants(1, 1);
    CHECK(p.n0 == 2);
    CHECK(p.n1 == 4);
    CHECK(p.n2 == 82);
    CHECK(p.f.at(1) == 2);
    CHECK(p.nStar == 17);
}

TEST_CASE("derived constants, adhesion two") {
    LiftParameters p = derived_constants(1, 2);
    CHECK(p.n0 == 6);
    CHECK(p.n1 == 24);
    CHECK(p.n2 == 14406);
    CHECK(p.f.at(2) == 259308);
    CHECK(p.nStar == 14002633);
}

TEST_CASE("derived constants reject bad parameters") {
    CHECK_THROWS_AS(derived_constants(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(derived_constants(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(derived_constants(1, 20000), std::invalid_argument);
}

TEST_CASE("unit-bag lift of a path alternates at the middle") {
    Multigraph g = ts::path(3);
    LiftParameters params = derived_constants(1, 1);
    CanonicalProvider provider(1);
    LiftStats stats;
    Coloring c = lift_unit_bags(g, unitBagPath(3), unitKMap(3), provider, params, &stats);
    CHECK(c.color(0) == 1);
    CHECK(c.color(1) == 2);
    CHECK(c.color(2) == 1);
    CHECK(verify_clustering(g, c, 2, 17).ok);
    CHECK(stats.steps == 3);
    CHECK(stats.windowChecks > 0);
}

TEST_CASE("growth checks fire once components span earlier subtrees") {
    // P6 with a chord back into the first window forces tracked growth.
    Multigraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}});
    TreeCutDecomposition tcd;
    tcd.tree = ts::path(6);
    std::map<NodeId, int> kMap;
    for (int t = 0; t < 6; ++t) {
        tcd.bags[t] = {t};
        kMap[t] = 2;
    }
    LiftParameters params = derived_constants(2, 2);
    CanonicalProvider provider(2);
    LiftStats stats;
    Coloring c = lift_unit_bags(g, tcd, kMap, provider, params, &stats);
    CHECK(verify_clustering(g, c, 3, static_cast<long long>(params.nStar)).ok);
    CHECK(stats.growthChecks > 0);
}

TEST_CASE("lift rejects adhesion above the declared bound, naming the tree edge") {
    Multigraph g = ts::complete(4);
    LiftParameters params = derived_constants(1, 3);
    CanonicalProvider provider(1);
    bool thrown = false;
    try {
        lift_unit_bags(g, unitBagPath(4), unitKMap(4), provider, params);
    } catch (const std::invalid_argument& e) {
        thrown = true;
        CHECK(std::string(e.what()).find("tree edge") != std::string::npos);
    }
    CHECK(thrown);
}

TEST_CASE("general-bag lift pulls the contracted coloring back") {
    Multigraph g = ts::cycle(4);
    TreeCutDecomposition tcd;
    tcd.tree = ts::path(2);
    tcd.bags[0] = {0, 1};
    tcd.bags[1] = {2, 3};
    LiftParameters params = derived_constants(1, 2);
    CanonicalProvider provider(1);
    Coloring c = lift(g, tcd, unitKMap(2), provider, params);
    CHECK(c.color(0) == c.color(1));
    CHECK(c.color(2) == c.color(3));
    BigInt bound = lift_component_bound(params, 2);
    CHECK(bound == 2 * params.nStar);
    CHECK(verify_clustering(g, c, 2, static_cast<long long>(bound)).ok);
}

TEST_CASE("provider size cap surfaces as an error") {
    Multigraph g = ts::path(3);
    LiftParameters params = derived_constants(1, 1);
    CanonicalProvider provider(1, 1);  // middle torso minus bag has 2 vertices
    CHECK_THROWS_AS(lift_unit_bags(g, unitBagPath(3), unitKMap(3), provider, params),
                    std::invalid_argument);
}

TEST_CASE("certificate validation recomputes every condition") {
    Multigraph g = ts::path(3);
    StructureCertificate cert;
    cert.tcd.tree = Multigraph(1, {});
    cert.tcd.bags[0] = {0, 1, 2};
    cert.hPrime = ts::complete(5);
    cert.d = 2;
    cert.xi = 1;
    cert.eta = 1;
    cert.perNode[0] = CertNodeData{{}, 0};
    CHECK(validate_certificate(g, cert).ok);

    StructureCertificate fat = cert;
    fat.perNode[0].z = {0, 1};  // two edges with xi = 1
    CertReport rep = validate_certificate(g, fat);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.problems.empty());
}

TEST_CASE("coloring from a single-node certificate") {
    Multigraph g = ts::path(3);
    StructureCertificate cert;
    cert.tcd.tree = Multigraph(1, {});
    cert.tcd.bags[0] = {0, 1, 2};
    cert.hPrime = ts::complete(5);
    cert.d = 2;
    cert.xi = 1;
    cert.eta = 1;
    cert.perNode[0] = CertNodeData{{}, 0};
    BaseColorer base = [](const Multigraph& piece, int paletteSize) {
        auto found = find_clustered_coloring(piece, paletteSize, 1, 12);
        REQUIRE(found);
        return *found;
    };
    BigInt declared;
    Coloring c = color_from_certificate(g, cert, base, 2, 1, &declared);
    CHECK(declared > 0);
    long long cap = declared < g.vertexCount() ? static_cast<long long>(declared) : g.vertexCount();
    CHECK(verify_clustering(g, c, 3, cap).ok);
}

TEST_CASE("small-cut recursion splits at bridges and merges back") {
    // two K5 blocks joined by a bridge
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            edges.push_back({i, j});
            edges.push_back({5 + i, 5 + j});
        }
    edges.push_back({4, 5});
    Multigraph g(10, edges);

    int colorerCalls = 0;
    CertifiedColorer colorer = [&](const Multigraph& piece) {
        ++colorerCalls;
        auto found = find_clustered_coloring(piece, 4, 2, 12);
        REQUIRE(found);
        return *found;
    };
    std::vector<std::vector<VertexId>> leaves;
    Coloring c = color_via_small_cuts(g, colorer, 4, 2, &leaves);
    CHECK(colorerCalls == 2);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0] == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(leaves[1] == std::vector<VertexId>{5, 6, 7, 8, 9});
    CHECK(verify_clustering(g, c, 4, 2).ok);
}

TEST_CASE("small-cut recursion needs a wide palette") {
    CHECK_THROWS_AS(color_via_small_cuts(ts::complete(3), [](const Multigraph&) { return Coloring(3); }, 3, 1),
                    std::invalid_argument);
}
