#pragma once

#include <map>
#include <vector>

#include "cluscol/multigraph.hpp"

namespace cluscol {

// Rooted view of a tree graph: depth-first preorder with children visited in
// ascending node id, subtree intervals, and small-scale ancestor/LCA queries.
// The default root is the minimum node id.
struct RootedTree {
    RootedTree() = default;
    RootedTree(const Multigraph& tree, NodeId root);
    static RootedTree atMinRoot(const Multigraph& tree);

    NodeId root = -1;
    std::vector<NodeId> order;          // preorder, index 0 = root
    std::map<NodeId, int> indexOf;      // node -> preorder index
    std::map<NodeId, NodeId> parentOf;  // root maps to -1
    std::map<NodeId, int> subtreeEnd;   // node -> last preorder index inside its subtree
    std::map<NodeId, int> depthOf;
    std::map<NodeId, std::vector<NodeId>> childrenOf;  // ascending

    int size() const { return static_cast<int>(order.size()); }
    // a is an ancestor of b, or a == b
    bool isAncestor(NodeId a, NodeId b) const;
    bool inSubtree(NodeId top, NodeId node) const { return isAncestor(top, node); }
    NodeId lca(NodeId a, NodeId b) const;
    // whether t lies on the tree path between a and b (inclusive)
    bool onPath(NodeId t, NodeId a, NodeId b) const;
    // the child of t whose subtree contains desc (desc must be a strict descendant)
    NodeId childToward(NodeId t, NodeId desc) const;
};

}  // namespace cluscol
