#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cluscol/bigint.hpp"
#include "cluscol/coloring.hpp"
#include "cluscol/greedy_lift.hpp"
#include "cluscol/multigraph.hpp"
#include "cluscol/tree_cut.hpp"

namespace cluscol {

// Tree-decomposition: bags may overlap. Valid when the bags cover V(g), every
// edge has both ends in some bag, and each vertex's bag nodes induce a
// connected subtree. Adhesion is the largest bag intersection across a tree
// edge.
struct TreeDecomposition {
    Multigraph tree;
    std::map<NodeId, std::vector<VertexId>> bags;
};

struct TdReport {
    bool ok = false;
    long long adhesion = 0;
    long long maxBag = 0;
    std::vector<std::string> problems;
};

TdReport validate_td(const Multigraph& g, const TreeDecomposition& td);

// Torso at t: the subgraph induced by the bag plus one completion edge for
// each pair of bag vertices that share a neighboring node's bag without being
// adjacent. Completion edges get fresh ids above the host graph's edge ids.
struct TdTorso {
    Multigraph graph;
    std::vector<EdgeId> virtualEdges;  // the completion edges, ascending
};

TdTorso td_torso_at(const Multigraph& g, const TreeDecomposition& td, NodeId t);

// Prunes every bag down to the vertices still needed below: rooted at the
// minimum node id, a vertex stays at a node when the node is the top of its
// bag subtree, or when the node's subtree holds a neighbor of the vertex that
// the parent bag misses. Requires max degree <= d and adhesion <= eta.
// Guarantees: still a valid tree-decomposition, bags and adhesion never grow,
// every torso is a subgraph of the input torso with max degree
// <= eta*d + eta - 1, and every vertex appears in at most d+1 bags among any
// node and its tree neighbors.
TreeDecomposition simplify(const Multigraph& g, const TreeDecomposition& td, int d, int eta);

// Tree-cut form of a tree-decomposition. The tree gains one fresh leaf per
// vertex, hung off the top bag node of that vertex in the simplified
// decomposition; leaf bags are singletons and every original bag becomes
// empty. Per original node the torso is verified to embed into the shape the
// stable-extension coloring handles: the simplified torso with the upward
// shared set identified into one vertex, plus a stable set of peripherals
// whose neighborhoods are cliques of at most eta vertices.
struct TreeCutConversion {
    TreeCutDecomposition tcd;
    TreeDecomposition simplified;
    std::map<NodeId, std::vector<VertexId>> assignedAt;  // node -> vertices whose leaf hangs there
    std::map<NodeId, std::vector<VertexId>> upSets;      // node -> bag vertices shared with the parent
    std::map<VertexId, NodeId> leafOf;                   // vertex -> its leaf node
    std::map<NodeId, int> shapeDegree;                   // node -> max degree of the verified shape
    int measuredAdhesion = 0;
    // Candidate adhesion caps (d+1)*eta^2 + d and (d+1)^2*eta + d. The
    // measured adhesion is asserted to stay under at least one of them; the
    // flags record which held.
    long long capEtaSquared = 0;
    long long capDegSquared = 0;
    bool withinEtaSquared = false;
    bool withinDegSquared = false;
};

TreeCutConversion to_tree_cut(const Multigraph& g, const TreeDecomposition& td, int d, int eta);

// Shape parameters of the identification/stable-set extension: base max
// degree d, identified-set and clique cap eta, base clustering N, extended
// max degree dPrime.
struct StableExtensionParams {
    int d = 0;
    int eta = 0;
    int clusteringN = 0;
    int dPrime = 0;
};

// The clustering the extension certifies: (dPrime+1) * (d*eta*N + 1).
long long stable_extension_bound(const StableExtensionParams& params);

// gPrime must be base with s identified into one vertex (fresh id, or the
// member itself when s is a singleton) plus a stable set iSet of new vertices
// whose neighborhoods are cliques of at most eta vertices. The identified
// vertex and all of iSet get color 1, every other vertex keeps its base
// color. The result is verified against stable_extension_bound.
Coloring color_stable_extension(const Multigraph& base, const Coloring& baseColoring,
                                const Multigraph& gPrime, const std::vector<VertexId>& s,
                                const std::vector<VertexId>& iSet, const StableExtensionParams& params);

using TorsoColorer = std::function<Coloring(NodeId, const Multigraph&)>;
using BagColorer = std::function<Coloring(NodeId, const Multigraph&)>;

struct PipelineResult {
    Coloring coloring;
    int paletteUsed = 0;
    long long innerClustering = 0;  // torso clustering handed to the lift
    BigInt declaredBound;           // lift bound at the measured adhesion
    BigInt symbolicBound;           // lift bound at the larger adhesion cap
    long long measuredWorst = 0;
    TreeCutConversion conversion;
    LiftStats liftStats;
};

// Full pipeline from torso colorings: torsoColorer must color every torso of
// td with k colors and clustering <= clusteringN (verified per node). The
// output uses exactly k colors. Requires k >= 2, max degree <= d, adhesion
// <= eta.
PipelineResult lift_from_torso_colorings(const Multigraph& g, const TreeDecomposition& td, int k,
                                         const TorsoColorer& torsoColorer, int d, int eta, int clusteringN);

// Same pipeline from colorings of the induced bags only. The added peripheral
// stable sets absorb one extra color, so the output uses exactly k+1 colors.
// Any k >= 1.
PipelineResult lift_from_bag_colorings(const Multigraph& g, const TreeDecomposition& td, int k,
                                       const BagColorer& bagColorer, int d, int eta, int clusteringN);

}  // namespace cluscol
