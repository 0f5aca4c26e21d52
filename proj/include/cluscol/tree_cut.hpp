#pragma once

#include <map>
#include <string>
#include <vector>

#include "cluscol/multigraph.hpp"

namespace cluscol {

// Tree-cut decomposition: a tree whose nodes carry pairwise-disjoint bags that
// together partition V(g). Every tree node has a bag entry, possibly empty.
struct TreeCutDecomposition {
    Multigraph tree;
    std::map<NodeId, std::vector<VertexId>> bags;
};

struct TcdReport {
    bool ok = false;
    long long adhesion = 0;  // max crossing-edge count over tree edges
    long long maxBag = 0;
    std::vector<std::string> problems;
};

TcdReport validate_tcd(const Multigraph& g, const TreeCutDecomposition& tcd);

// Edges of g with one end on each side of the bag bipartition induced by
// removing the given tree edge. Ascending edge ids.
std::vector<EdgeId> adhesion_set(const Multigraph& g, const TreeCutDecomposition& tcd, EdgeId treeEdge);

// Torso of g at a tree node t: every component of the tree minus t is
// identified into one peripheral vertex; loops created at peripheral vertices
// are dropped, parallel edges are kept. Peripheral vertex ids sit above all
// vertex ids of g and are keyed by the minimum tree node of their component,
// so they are stable across calls.
struct Torso {
    Multigraph graph;
    std::vector<VertexId> coreVertices;                    // the bag, ascending
    std::map<VertexId, std::vector<NodeId>> peripheralMap; // peripheral -> component nodes
    std::map<NodeId, VertexId> nodeToPeripheral;           // every non-t node -> its peripheral
    std::map<EdgeId, EdgeId> edgeCorrespondence;           // torso edge -> g edge (injective)
};

Torso torso_at(const Multigraph& g, const TreeCutDecomposition& tcd, NodeId t);

// Identifies each nonempty bag into a single vertex. Every edge of g survives
// with its id: intra-bag edges become loops, inter-bag edges join the two bag
// vertices, so each tree edge keeps exactly its original crossing edge set.
struct ContractResult {
    Multigraph gPrime;
    TreeCutDecomposition tcdPrime;            // same tree, singleton or empty bags
    std::map<VertexId, VertexId> liftMap;     // vertex of g -> its bag vertex in gPrime
};

ContractResult contract_bags(const Multigraph& g, const TreeCutDecomposition& tcd);

}  // namespace cluscol
