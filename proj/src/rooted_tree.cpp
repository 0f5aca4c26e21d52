#include "cluscol/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluscol {

RootedTree::RootedTree(const Multigraph& tree, NodeId rootNode) : root(rootNode) {
    if (!tree.hasVertex(root)) throw std::invalid_argument("rooted_tree: unknown root");
    // Iterative preorder; the explicit stack keeps deep paths safe.
    std::vector<NodeId> stack{root};
    parentOf[root] = -1;
    depthOf[root] = 0;
    while (!stack.empty()) {
        NodeId t = stack.back();
        stack.pop_back();
        indexOf[t] = static_cast<int>(order.size());
        order.push_back(t);
        std::vector<NodeId> kids;
        for (NodeId nb : tree.neighbors(t)) {
            if (nb != parentOf[t]) kids.push_back(nb);
        }
        std::sort(kids.begin(), kids.end());
        childrenOf[t] = kids;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            if (parentOf.count(*it)) throw std::invalid_argument("rooted_tree: graph has a cycle");
            parentOf[*it] = t;
            depthOf[*it] = depthOf[t] + 1;
            stack.push_back(*it);
        }
    }
    if (static_cast<int>(order.size()) != tree.vertexCount())
        throw std::invalid_argument("rooted_tree: graph is not connected");
    // Preorder puts each subtree in a contiguous index range.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId t = *it;
        int end = indexOf[t];
        for (NodeId c : childrenOf[t]) end = std::max(end, subtreeEnd[c]);
        subtreeEnd[t] = end;
    }
}

RootedTree RootedTree::atMinRoot(const Multigraph& tree) {
    if (tree.vertexCount() == 0) throw std::invalid_argument("rooted_tree: empty tree");
    return RootedTree(tree, tree.vertices().front());
}

bool RootedTree::isAncestor(NodeId a, NodeId b) const {
    int ia = indexOf.at(a);
    int ib = indexOf.at(b);
    return ia <= ib && ib <= subtreeEnd.at(a);
}

NodeId RootedTree::lca(NodeId a, NodeId b) const {
    while (!isAncestor(a, b)) a = parentOf.at(a);
    return a;
}

bool RootedTree::onPath(NodeId t, NodeId a, NodeId b) const {
    if (!isAncestor(lca(a, b), t)) return false;
    return isAncestor(t, a) || isAncestor(t, b);
}

NodeId RootedTree::childToward(NodeId t, NodeId desc) const {
    NodeId cur = desc;
    while (parentOf.at(cur) != t) {
        cur = parentOf.at(cur);
        if (cur == -1) throw std::invalid_argument("rooted_tree: not a strict descendant");
    }
    return cur;
}

}  // namespace cluscol
