#include "cluscol/tree_cut.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "cluscol/rooted_tree.hpp"

namespace cluscol {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("tree_cut: " + msg); }

bool isTree(const Multigraph& t) {
    if (t.vertexCount() == 0) return false;
    if (t.edgeCount() != t.vertexCount() - 1) return false;
    for (const EdgeRec& e : t.edges())
        if (e.isLoop()) return false;
    return t.components().size() == 1;
}

std::map<VertexId, NodeId> bagNodeOf(const TreeCutDecomposition& tcd) {
    std::map<VertexId, NodeId> node;
    for (const auto& [t, bag] : tcd.bags)
        for (VertexId v : bag) node[v] = t;
    return node;
}

// Tree nodes on the te.u side once the tree edge te is removed.
std::set<NodeId> sideNodes(const Multigraph& tree, const EdgeRec& te) {
    std::set<NodeId> side{te.u};
    std::deque<NodeId> todo{te.u};
    while (!todo.empty()) {
        NodeId t = todo.front();
        todo.pop_front();
        for (EdgeId e : tree.incidentEdges(t)) {
            if (e == te.id) continue;
            NodeId w = tree.edge(e).otherEnd(t);
            if (side.insert(w).second) todo.push_back(w);
        }
    }
    return side;
}

}  // namespace

TcdReport validate_tcd(const Multigraph& g, const TreeCutDecomposition& tcd) {
    TcdReport rep;
    if (!isTree(tcd.tree)) {
        rep.problems.push_back("decomposition graph is not a tree");
        return rep;
    }
    for (const auto& [t, bag] : tcd.bags) {
        if (!tcd.tree.hasVertex(t)) rep.problems.push_back("bag for unknown node " + std::to_string(t));
        (void)bag;
    }
    for (NodeId t : tcd.tree.vertices())
        if (!tcd.bags.count(t)) rep.problems.push_back("node " + std::to_string(t) + " has no bag entry");
    if (!rep.problems.empty()) return rep;

    std::map<VertexId, int> hits;
    for (const auto& [t, bag] : tcd.bags) {
        rep.maxBag = std::max(rep.maxBag, static_cast<long long>(bag.size()));
        std::set<VertexId> inBag;
        for (VertexId v : bag) {
            if (!g.hasVertex(v)) rep.problems.push_back("bag of node " + std::to_string(t) +
                                                        " lists unknown vertex " + std::to_string(v));
            if (!inBag.insert(v).second)
                rep.problems.push_back("bag of node " + std::to_string(t) + " repeats vertex " + std::to_string(v));
            hits[v] += 1;
        }
    }
    for (VertexId v : g.vertices()) {
        auto it = hits.find(v);
        if (it == hits.end()) rep.problems.push_back("vertex " + std::to_string(v) + " is in no bag");
        else if (it->second > 1)
            rep.problems.push_back("vertex " + std::to_string(v) + " appears in several bags");
    }
    if (!rep.problems.empty()) return rep;

    // Each graph edge loads exactly the tree edges on the path between its
    // endpoint bags.
    RootedTree rt = RootedTree::atMinRoot(tcd.tree);
    std::map<VertexId, NodeId> node = bagNodeOf(tcd);
    std::map<EdgeId, long long> load;
    for (const EdgeRec& te : tcd.tree.edges()) load[te.id] = 0;
    for (const EdgeRec& e : g.edges()) {
        NodeId a = node.at(e.u);
        NodeId b = node.at(e.v);
        if (a == b) continue;
        for (const EdgeRec& te : tcd.tree.edges())
            if (rt.onPath(te.u, a, b) && rt.onPath(te.v, a, b)) load[te.id] += 1;
    }
    for (const auto& [te, c] : load) rep.adhesion = std::max(rep.adhesion, c);
    rep.ok = true;
    return rep;
}

std::vector<EdgeId> adhesion_set(const Multigraph& g, const TreeCutDecomposition& tcd, EdgeId treeEdge) {
    if (!tcd.tree.hasEdge(treeEdge)) fail("unknown tree edge " + std::to_string(treeEdge));
    const EdgeRec& te = tcd.tree.edge(treeEdge);
    std::set<NodeId> side = sideNodes(tcd.tree, te);
    std::set<VertexId> vside;
    for (NodeId t : side) {
        auto it = tcd.bags.find(t);
        if (it != tcd.bags.end()) vside.insert(it->second.begin(), it->second.end());
    }
    std::vector<EdgeId> out;
    for (const EdgeRec& e : g.edges()) {
        if (e.isLoop()) continue;
        if (vside.count(e.u) != vside.count(e.v)) out.push_back(e.id);
    }
    return out;
}

Torso torso_at(const Multigraph& g, const TreeCutDecomposition& tcd, NodeId t) {
    if (!tcd.tree.hasVertex(t)) fail("unknown tree node " + std::to_string(t));
    auto bagIt = tcd.bags.find(t);
    if (bagIt == tcd.bags.end()) fail("node " + std::to_string(t) + " has no bag entry");

    Torso torso;
    torso.coreVertices = bagIt->second;
    std::sort(torso.coreVertices.begin(), torso.coreVertices.end());

    // Components of the tree minus t, each flattened to one peripheral vertex.
    VertexId base = g.maxVertexId() + 1;
    std::set<NodeId> visited{t};
    for (NodeId start : tcd.tree.neighbors(t)) {
        if (visited.count(start)) continue;
        std::vector<NodeId> comp;
        std::deque<NodeId> todo{start};
        visited.insert(start);
        while (!todo.empty()) {
            NodeId n = todo.front();
            todo.pop_front();
            comp.push_back(n);
            for (NodeId w : tcd.tree.neighbors(n))
                if (visited.insert(w).second) todo.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        VertexId pid = base + comp.front();
        torso.peripheralMap[pid] = comp;
        for (NodeId n : comp) torso.nodeToPeripheral[n] = pid;
    }

    std::map<VertexId, NodeId> node = bagNodeOf(tcd);
    std::set<VertexId> core(torso.coreVertices.begin(), torso.coreVertices.end());
    auto place = [&](VertexId v) -> VertexId {
        if (core.count(v)) return v;
        return torso.nodeToPeripheral.at(node.at(v));
    };

    std::vector<VertexId> verts = torso.coreVertices;
    for (const auto& [pid, comp] : torso.peripheralMap) verts.push_back(pid);
    std::vector<EdgeRec> es;
    for (const EdgeRec& e : g.edges()) {
        VertexId pu = place(e.u);
        VertexId pv = place(e.v);
        bool loopAtPeripheral = pu == pv && !core.count(pu);
        if (loopAtPeripheral) continue;
        es.push_back(EdgeRec{e.id, pu, pv});
        torso.edgeCorrespondence[e.id] = e.id;
    }
    torso.graph = Multigraph(std::move(verts), std::move(es));
    return torso;
}

ContractResult contract_bags(const Multigraph& g, const TreeCutDecomposition& tcd) {
    TcdReport rep = validate_tcd(g, tcd);
    if (!rep.ok) fail("contract_bags: invalid decomposition: " + rep.problems.front());

    ContractResult res;
    std::map<NodeId, VertexId> bagVertex;
    VertexId next = 0;
    for (const auto& [t, bag] : tcd.bags) {
        if (bag.empty()) continue;
        bagVertex[t] = next++;
        for (VertexId v : bag) res.liftMap[v] = bagVertex[t];
    }
    std::vector<VertexId> verts;
    for (const auto& [t, w] : bagVertex) verts.push_back(w);
    std::vector<EdgeRec> es;
    for (const EdgeRec& e : g.edges())
        es.push_back(EdgeRec{e.id, res.liftMap.at(e.u), res.liftMap.at(e.v)});
    res.gPrime = Multigraph(std::move(verts), std::move(es));

    res.tcdPrime.tree = tcd.tree;
    for (const auto& [t, bag] : tcd.bags) {
        if (bagVertex.count(t)) res.tcdPrime.bags[t] = {bagVertex[t]};
        else res.tcdPrime.bags[t] = {};
    }
    return res;
}

}  // namespace cluscol
