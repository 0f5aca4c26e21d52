#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cluscol/bigint.hpp"
#include "cluscol/coloring.hpp"
#include "cluscol/multigraph.hpp"

namespace cluscol {

// Hard size caps for the exhaustive searches. Exceeding a cap is an error, not
// a silent slow run.
struct OracleCaps {
    int colorSearchVertices = 10;
    int immersionVertices = 9;
    int immersionEdges = 16;
};

// First k-coloring of g with every monochromatic component of size at most
// maxComponent, in canonical search order: vertices ascending, colors tried
// ascending, and each color first used by the smallest possible vertex (color
// symmetry pruning). jobs > 1 splits the search over canonical prefixes; the
// returned coloring is identical to the sequential one.
std::optional<Coloring> find_clustered_coloring(const Multigraph& g, int k, long long maxComponent,
                                                int capVertices = 10, int jobs = 1);

// Exact minimum palette size admitting clustering maxComponent. Always >= 1;
// equals 1 whenever maxComponent >= |V(g)|.
int min_clustered_colors(const Multigraph& g, long long maxComponent, int capVertices = 10, int jobs = 1);

// Immersion of h in g: an injection of branch vertices plus pairwise
// edge-disjoint connecting paths (cycles for loops of h). When strong, no path
// passes through the image of a branch vertex not incident to its edge.
struct ImmersionWitness {
    std::map<VertexId, VertexId> vertexMap;            // V(h) -> V(g)
    std::map<EdgeId, std::vector<EdgeId>> pathMap;     // h edge -> g edge id walk
    bool strong = false;
};

// Exhaustive search returning the canonical (lexicographically least) witness,
// or nothing. h edges are routed hardest first (endpoint degrees descending).
std::optional<ImmersionWitness> has_immersion(const Multigraph& g, const Multigraph& h, bool strong = false,
                                              const OracleCaps& caps = {});

// eta disjoint copies of base plus one apex vertex adjacent to every other
// vertex. Copies occupy ids 0..eta*|V(base)|-1 in copy-major order; the apex
// has the top id.
Multigraph gen_apex_blocker(const Multigraph& base, int eta);

// A path on maxComponent+1 vertices where each path edge additionally carries
// 2*maxComponent-1 copies of base, every copy joined completely to both path
// endpoints of its layer. Path vertices take ids 0..maxComponent.
Multigraph gen_layered_blocker(const Multigraph& base, long long maxComponent);

// (h-1)^h, the component bound for graphs with no star on h+1 vertices and no
// path on h vertices.
BigInt degree_one_bound(int h);

struct DegreeOneCheck {
    bool preconditionsHold = false;  // no vertex with h distinct neighbors, no path on h vertices
    bool ok = false;                 // preconditions hold and every component fits the bound
    long long largestComponent = 0;
    BigInt bound;
};

DegreeOneCheck degree_one_check(const Multigraph& g, int h);

}  // namespace cluscol
