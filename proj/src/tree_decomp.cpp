#include "cluscol/tree_decomp.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <utility>

#include "cluscol/rooted_tree.hpp"

namespace cluscol {

namespace {

bool isTree(const Multigraph& t) {
    if (t.vertexCount() == 0) return false;
    if (t.edgeCount() != t.vertexCount() - 1) return false;
    for (const EdgeRec& e : t.edges())
        if (e.isLoop()) return false;
    return t.components().size() == 1;
}

std::vector<VertexId> sortedUnique(std::vector<VertexId> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<VertexId> sortedIntersection(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::set<std::pair<VertexId, VertexId>> simpleAdjacency(const Multigraph& g) {
    std::set<std::pair<VertexId, VertexId>> adj;
    for (const EdgeRec& e : g.edges())
        if (!e.isLoop()) adj.insert(std::minmax(e.u, e.v));
    return adj;
}

}  // namespace

TdReport validate_td(const Multigraph& g, const TreeDecomposition& td) {
    TdReport rep;
    if (!isTree(td.tree)) {
        rep.problems.push_back("decomposition graph is not a tree");
        return rep;
    }
    for (const auto& [t, bag] : td.bags) {
        if (!td.tree.hasVertex(t)) rep.problems.push_back("bag for unknown node " + std::to_string(t));
        (void)bag;
    }
    for (NodeId t : td.tree.vertices())
        if (!td.bags.count(t)) rep.problems.push_back("node " + std::to_string(t) + " has no bag entry");
    if (!rep.problems.empty()) return rep;

    std::map<NodeId, std::vector<VertexId>> bags;
    std::map<VertexId, std::vector<NodeId>> nodesOf;
    for (const auto& [t, bag] : td.bags) {
        std::set<VertexId> seen;
        for (VertexId v : bag) {
            if (!g.hasVertex(v)) {
                rep.problems.push_back("bag of node " + std::to_string(t) + " lists unknown vertex " +
                                       std::to_string(v));
                continue;
            }
            if (!seen.insert(v).second) {
                rep.problems.push_back("bag of node " + std::to_string(t) + " repeats vertex " + std::to_string(v));
                continue;
            }
            nodesOf[v].push_back(t);
        }
        bags[t] = std::vector<VertexId>(seen.begin(), seen.end());
        rep.maxBag = std::max(rep.maxBag, static_cast<long long>(seen.size()));
    }
    if (!rep.problems.empty()) return rep;

    for (VertexId v : g.vertices())
        if (!nodesOf.count(v)) rep.problems.push_back("vertex " + std::to_string(v) + " is in no bag");

    for (auto& [v, nodes] : nodesOf) {
        std::sort(nodes.begin(), nodes.end());
        std::set<NodeId> within(nodes.begin(), nodes.end());
        std::set<NodeId> seen{nodes.front()};
        std::vector<NodeId> todo{nodes.front()};
        while (!todo.empty()) {
            NodeId t = todo.back();
            todo.pop_back();
            for (EdgeId e : td.tree.incidentEdges(t)) {
                NodeId w = td.tree.edge(e).otherEnd(t);
                if (within.count(w) && seen.insert(w).second) todo.push_back(w);
            }
        }
        if (seen.size() != within.size())
            rep.problems.push_back("bag nodes of vertex " + std::to_string(v) + " are not connected in the tree");
    }

    for (const EdgeRec& e : g.edges()) {
        bool covered = false;
        auto it = nodesOf.find(e.u);
        if (it != nodesOf.end()) {
            for (NodeId t : it->second) {
                if (std::binary_search(bags[t].begin(), bags[t].end(), e.v)) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) rep.problems.push_back("edge " + std::to_string(e.id) + " has no bag containing both ends");
    }

    for (const EdgeRec& te : td.tree.edges())
        rep.adhesion =
            std::max(rep.adhesion, static_cast<long long>(sortedIntersection(bags[te.u], bags[te.v]).size()));

    rep.ok = rep.problems.empty();
    return rep;
}

TdTorso td_torso_at(const Multigraph& g, const TreeDecomposition& td, NodeId t) {
    if (!td.tree.hasVertex(t)) throw std::invalid_argument("tree_decomp: torso at unknown node " + std::to_string(t));
    auto bagIt = td.bags.find(t);
    if (bagIt == td.bags.end())
        throw std::invalid_argument("tree_decomp: node " + std::to_string(t) + " has no bag entry");
    std::vector<VertexId> bag = sortedUnique(bagIt->second);
    Multigraph induced = g.inducedSubgraph(bag);
    std::set<std::pair<VertexId, VertexId>> have = simpleAdjacency(induced);

    std::set<std::pair<VertexId, VertexId>> missing;
    for (EdgeId te : td.tree.incidentEdges(t)) {
        NodeId nb = td.tree.edge(te).otherEnd(t);
        auto nbIt = td.bags.find(nb);
        if (nbIt == td.bags.end())
            throw std::invalid_argument("tree_decomp: node " + std::to_string(nb) + " has no bag entry");
        std::vector<VertexId> inter = sortedIntersection(bag, sortedUnique(nbIt->second));
        for (size_t i = 0; i < inter.size(); ++i)
            for (size_t j = i + 1; j < inter.size(); ++j) {
                auto pr = std::make_pair(inter[i], inter[j]);
                if (!have.count(pr)) missing.insert(pr);
            }
    }

    TdTorso out;
    std::vector<EdgeRec> edges(induced.edges().begin(), induced.edges().end());
    EdgeId next = g.maxEdgeId() + 1;
    for (const auto& [u, v] : missing) {
        edges.push_back(EdgeRec{next, u, v});
        out.virtualEdges.push_back(next);
        ++next;
    }
    out.graph = Multigraph(induced.vertices(), std::move(edges));
    return out;
}

TreeDecomposition simplify(const Multigraph& g, const TreeDecomposition& td, int d, int eta) {
    if (d < 1 || eta < 1) throw std::invalid_argument("simplify: d and eta must be positive");
    if (g.maxDegree() > d)
        throw std::invalid_argument("simplify: graph max degree " + std::to_string(g.maxDegree()) + " exceeds d " +
                                    std::to_string(d));
    TdReport rep = validate_td(g, td);
    if (!rep.ok) throw std::invalid_argument("simplify: invalid tree-decomposition: " + rep.problems.front());
    if (rep.adhesion > eta)
        throw std::invalid_argument("simplify: adhesion " + std::to_string(rep.adhesion) + " exceeds eta " +
                                    std::to_string(eta));

    RootedTree rt = RootedTree::atMinRoot(td.tree);
    std::map<NodeId, std::vector<VertexId>> bags;
    for (NodeId t : td.tree.vertices()) bags[t] = sortedUnique(td.bags.at(t));

    // top of each vertex's bag subtree = its first bag node in preorder
    std::map<VertexId, NodeId> top;
    for (NodeId t : rt.order)
        for (VertexId v : bags[t]) top.emplace(v, t);

    auto inBag = [&](NodeId t, VertexId v) {
        const std::vector<VertexId>& b = bags[t];
        return std::binary_search(b.begin(), b.end(), v);
    };

    TreeDecomposition out;
    out.tree = td.tree;
    for (NodeId t : td.tree.vertices()) {
        std::vector<VertexId> keep;
        for (VertexId v : bags[t]) {
            bool wanted = top[v] == t;
            if (!wanted) {
                NodeId p = rt.parentOf.at(t);
                for (VertexId u : g.neighbors(v)) {
                    if (!inBag(p, u) && rt.isAncestor(t, top[u])) {
                        wanted = true;
                        break;
                    }
                }
            }
            if (wanted) keep.push_back(v);
        }
        out.bags[t] = std::move(keep);
    }

    TdReport after = validate_td(g, out);
    if (!after.ok) throw ClaimViolation("simplify: output failed validation: " + after.problems.front());
    if (after.adhesion > rep.adhesion)
        throw ClaimViolation("simplify: adhesion grew from " + std::to_string(rep.adhesion) + " to " +
                             std::to_string(after.adhesion));

    long long degCap = static_cast<long long>(eta) * d + eta - 1;
    for (NodeId t : td.tree.vertices()) {
        TdTorso fine = td_torso_at(g, out, t);
        if (fine.graph.maxDegree() > degCap)
            throw ClaimViolation("simplify: torso degree " + std::to_string(fine.graph.maxDegree()) + " at node " +
                                 std::to_string(t) + " exceeds " + std::to_string(degCap));
        TdTorso coarse = td_torso_at(g, td, t);
        std::set<std::pair<VertexId, VertexId>> wide = simpleAdjacency(coarse.graph);
        for (const auto& pr : simpleAdjacency(fine.graph))
            if (!wide.count(pr))
                throw ClaimViolation("simplify: torso at node " + std::to_string(t) +
                                     " is not a subgraph of the input torso");
        for (VertexId v : out.bags.at(t)) {
            int hits = 0;
            for (EdgeId te : td.tree.incidentEdges(t)) {
                const std::vector<VertexId>& nb = out.bags.at(td.tree.edge(te).otherEnd(t));
                if (std::binary_search(nb.begin(), nb.end(), v)) ++hits;
            }
            if (hits > d + 1)
                throw ClaimViolation("simplify: vertex " + std::to_string(v) + " meets " + std::to_string(hits) +
                                     " neighbor bags at node " + std::to_string(t) + ", cap " +
                                     std::to_string(d + 1));
        }
    }
    return out;
}

TreeCutConversion to_tree_cut(const Multigraph& g, const TreeDecomposition& td, int d, int eta) {
    TreeCutConversion out;
    out.simplified = simplify(g, td, d, eta);
    const Multigraph& tree = td.tree;
    RootedTree rt = RootedTree::atMinRoot(tree);

    std::map<VertexId, NodeId> top;
    for (NodeId t : rt.order)
        for (VertexId v : out.simplified.bags.at(t)) top.emplace(v, t);

    for (NodeId t : tree.vertices()) {
        std::vector<VertexId> own;
        for (VertexId v : out.simplified.bags.at(t))
            if (top[v] == t) own.push_back(v);
        out.assignedAt[t] = std::move(own);
        if (t == rt.root)
            out.upSets[t] = {};
        else
            out.upSets[t] =
                sortedIntersection(out.simplified.bags.at(t), out.simplified.bags.at(rt.parentOf.at(t)));
    }

    std::vector<NodeId> nodes = tree.vertices();
    std::vector<EdgeRec> treeEdges(tree.edges().begin(), tree.edges().end());
    NodeId nextNode = tree.maxVertexId() + 1;
    EdgeId nextEdge = tree.maxEdgeId() + 1;
    for (NodeId t : tree.vertices()) out.tcd.bags[t] = {};
    for (NodeId t : tree.vertices()) {
        for (VertexId v : out.assignedAt.at(t)) {
            NodeId leaf = nextNode++;
            nodes.push_back(leaf);
            treeEdges.push_back(EdgeRec{nextEdge++, t, leaf});
            out.tcd.bags[leaf] = {v};
            out.leafOf[v] = leaf;
        }
    }
    out.tcd.tree = Multigraph(std::move(nodes), std::move(treeEdges));

    TcdReport rep = validate_tcd(g, out.tcd);
    if (!rep.ok) throw ClaimViolation("tree-cut conversion: output failed validation: " + rep.problems.front());
    out.measuredAdhesion = static_cast<int>(rep.adhesion);
    out.capEtaSquared = static_cast<long long>(d + 1) * eta * eta + d;
    out.capDegSquared = static_cast<long long>(d + 1) * (d + 1) * eta + d;
    out.withinEtaSquared = rep.adhesion <= out.capEtaSquared;
    out.withinDegSquared = rep.adhesion <= out.capDegSquared;
    if (!out.withinEtaSquared && !out.withinDegSquared)
        throw ClaimViolation("tree-cut conversion: adhesion " + std::to_string(out.measuredAdhesion) +
                             " exceeds both caps " + std::to_string(out.capEtaSquared) + " and " +
                             std::to_string(out.capDegSquared));

    RootedTree rt2 = RootedTree::atMinRoot(out.tcd.tree);
    for (NodeId t : tree.vertices()) {
        Torso torso = torso_at(g, out.tcd, t);
        VertexId up = -1;
        if (t != rt2.root) {
            auto it = torso.nodeToPeripheral.find(rt2.parentOf.at(t));
            if (it != torso.nodeToPeripheral.end()) up = it->second;
        }
        const std::vector<VertexId>& sT = out.upSets.at(t);
        if (!sT.empty() && up < 0)
            throw ClaimViolation("tree-cut conversion: upward shared set at node " + std::to_string(t) +
                                 " has no peripheral");
        if (static_cast<int>(sT.size()) > eta)
            throw ClaimViolation("tree-cut conversion: node " + std::to_string(t) + " shares " +
                                 std::to_string(sT.size()) + " vertices with its parent, cap " +
                                 std::to_string(eta));

        // torso vertex -> vertex of the shape graph
        std::map<VertexId, VertexId> intoShape;
        std::set<VertexId> added;
        for (const auto& [p, comp] : torso.peripheralMap) {
            if (p == up) {
                intoShape[p] = p;
            } else if (comp.size() == 1 && !tree.hasVertex(comp.front())) {
                intoShape[p] = out.tcd.bags.at(comp.front()).front();
            } else {
                added.insert(p);
                intoShape[p] = p;
            }
        }

        // shape: simplified torso with the shared set identified onto `up`
        TdTorso q = td_torso_at(g, out.simplified, t);
        std::set<VertexId> sSet(sT.begin(), sT.end());
        std::map<VertexId, std::set<VertexId>> adj;
        for (VertexId v : q.graph.vertices())
            if (!sSet.count(v)) adj[v];
        if (up >= 0) adj[up];
        for (VertexId p : added) adj[p];
        for (const EdgeRec& e : q.graph.edges()) {
            VertexId a = sSet.count(e.u) ? up : e.u;
            VertexId b = sSet.count(e.v) ? up : e.v;
            if (a == b) continue;
            adj[a].insert(b);
            adj[b].insert(a);
        }

        std::map<VertexId, std::set<VertexId>> tadj;
        for (const EdgeRec& e : torso.graph.edges()) {
            if (e.isLoop()) continue;
            tadj[e.u].insert(e.v);
            tadj[e.v].insert(e.u);
        }
        for (VertexId p : added) {
            for (VertexId nb : tadj[p]) {
                if (added.count(nb))
                    throw ClaimViolation("tree-cut conversion: two added peripherals at node " + std::to_string(t) +
                                         " are adjacent");
                adj[p].insert(intoShape.at(nb));
                adj[intoShape.at(nb)].insert(p);
            }
        }
        for (const EdgeRec& e : torso.graph.edges()) {
            if (e.isLoop() || added.count(e.u) || added.count(e.v)) continue;
            if (!adj[intoShape.at(e.u)].count(intoShape.at(e.v)))
                throw ClaimViolation("tree-cut conversion: torso edge at node " + std::to_string(t) +
                                     " is missing from the verified shape");
        }
        for (VertexId p : added) {
            const std::set<VertexId>& nbrs = adj[p];
            if (static_cast<int>(nbrs.size()) > eta)
                throw ClaimViolation("tree-cut conversion: added peripheral at node " + std::to_string(t) +
                                     " has " + std::to_string(nbrs.size()) + " neighbors, cap " +
                                     std::to_string(eta));
            for (VertexId a : nbrs)
                for (VertexId b : nbrs) {
                    if (a >= b) continue;
                    if (!adj[a].count(b))
                        throw ClaimViolation("tree-cut conversion: neighborhood of an added peripheral at node " +
                                             std::to_string(t) + " is not a clique");
                }
        }
        int deg = 0;
        for (const auto& [v, ns] : adj) {
            (void)v;
            deg = std::max(deg, static_cast<int>(ns.size()));
        }
        out.shapeDegree[t] = deg;
    }
    return out;
}

long long stable_extension_bound(const StableExtensionParams& params) {
    return (static_cast<long long>(params.dPrime) + 1) *
           (static_cast<long long>(params.d) * params.eta * params.clusteringN + 1);
}

Coloring color_stable_extension(const Multigraph& base, const Coloring& baseColoring, const Multigraph& gPrime,
                                const std::vector<VertexId>& s, const std::vector<VertexId>& iSet,
                                const StableExtensionParams& params) {
    auto bad = [](const std::string& m) -> void { throw std::invalid_argument("stable extension: " + m); };
    if (params.d < 1 || params.eta < 1 || params.clusteringN < 1 || params.dPrime < 1)
        bad("all shape parameters must be positive");
    std::vector<VertexId> sSorted = sortedUnique(s);
    if (sSorted.size() != s.size()) bad("identified set repeats a vertex");
    if (static_cast<int>(sSorted.size()) > params.eta) bad("identified set larger than eta");
    for (VertexId v : sSorted)
        if (!base.hasVertex(v)) bad("identified vertex " + std::to_string(v) + " is not in the base graph");
    std::vector<VertexId> iSorted = sortedUnique(iSet);
    if (iSorted.size() != iSet.size()) bad("added set repeats a vertex");
    std::set<VertexId> sSet(sSorted.begin(), sSorted.end());
    std::set<VertexId> iMembers(iSorted.begin(), iSorted.end());
    for (VertexId v : iSorted) {
        if (base.hasVertex(v)) bad("added vertex " + std::to_string(v) + " is already in the base graph");
        if (!gPrime.hasVertex(v)) bad("added vertex " + std::to_string(v) + " is not in the extended graph");
    }
    if (base.maxDegree() > params.d)
        bad("base max degree " + std::to_string(base.maxDegree()) + " exceeds d " + std::to_string(params.d));
    if (gPrime.maxDegree() > params.dPrime)
        bad("extended max degree " + std::to_string(gPrime.maxDegree()) + " exceeds dPrime " +
            std::to_string(params.dPrime));
    ClusteringReport baseRep =
        verify_clustering(base, baseColoring, baseColoring.paletteSize(), params.clusteringN);
    if (!baseRep.ok) bad("base coloring rejected: " + baseRep.problem);

    // the identified vertex: the unique extended vertex that is neither a
    // surviving base vertex nor an added one
    VertexId vS = -1;
    {
        std::set<VertexId> expected;
        for (VertexId v : base.vertices())
            if (!sSet.count(v)) expected.insert(v);
        std::vector<VertexId> extra;
        for (VertexId v : gPrime.vertices()) {
            if (iMembers.count(v)) continue;
            if (expected.erase(v)) continue;
            extra.push_back(v);
        }
        if (!expected.empty())
            bad("base vertex " + std::to_string(*expected.begin()) + " is missing from the extended graph");
        if (sSorted.empty()) {
            if (!extra.empty()) bad("unexpected vertex " + std::to_string(extra.front()) + " in the extended graph");
        } else {
            if (extra.size() != 1) bad("the identified set needs exactly one image vertex");
            vS = extra.front();
        }
    }

    auto collapse = [&](VertexId v) { return sSet.count(v) ? vS : v; };
    std::set<std::pair<VertexId, VertexId>> want;
    std::set<VertexId> loopable;
    for (const EdgeRec& e : base.edges()) {
        VertexId a = collapse(e.u);
        VertexId b = collapse(e.v);
        if (a == b) {
            loopable.insert(a);
            continue;
        }
        want.insert(std::minmax(a, b));
    }
    std::set<std::pair<VertexId, VertexId>> have;
    for (const EdgeRec& e : gPrime.edges()) {
        if (iMembers.count(e.u) && iMembers.count(e.v)) bad("added set is not stable");
        if (iMembers.count(e.u) || iMembers.count(e.v)) continue;
        if (e.isLoop()) {
            if (!loopable.count(e.u)) bad("loop at vertex " + std::to_string(e.u) + " has no base counterpart");
            continue;
        }
        have.insert(std::minmax(e.u, e.v));
    }
    if (want != have) bad("extended graph does not match the identified base graph");

    for (VertexId v : iSorted) {
        std::vector<VertexId> nbrs = gPrime.neighbors(v);
        if (static_cast<int>(nbrs.size()) > params.eta)
            bad("added vertex " + std::to_string(v) + " has more than eta neighbors");
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b)
                if (!have.count(std::make_pair(nbrs[a], nbrs[b])))
                    bad("neighborhood of added vertex " + std::to_string(v) + " is not a clique");
    }

    int palette = std::max(baseColoring.paletteSize(), gPrime.empty() ? 0 : 1);
    Coloring out(palette);
    for (VertexId v : gPrime.vertices()) {
        if (iMembers.count(v) || (!sSorted.empty() && v == vS))
            out.assign(v, 1);
        else
            out.assign(v, baseColoring.color(v));
    }
    long long bound = stable_extension_bound(params);
    ClusteringReport rep = verify_clustering(gPrime, out, out.paletteSize(), bound);
    if (!rep.ok) throw ClaimViolation("stable extension: certified bound broken: " + rep.problem);
    return out;
}

namespace {

int smallestAllowed(int paletteSize, int forbidden) {
    for (int c = 1; c <= paletteSize; ++c)
        if (c != forbidden) return c;
    throw std::logic_error("tree_decomp: no allowed color in the palette");
}

// Colors tree-cut torsos after the conversion: peripherals standing for a
// fresh leaf inherit that vertex's color from the per-node coloring, the
// upward peripheral gets 1, every other peripheral gets addedColor.
class ConversionProvider : public TorsoColoringProvider {
public:
    ConversionProvider(const Multigraph& g, const TreeCutConversion& conv, const RootedTree& rt,
                       const std::map<NodeId, Coloring>& nodeColors, int addedColor)
        : g_(g), conv_(conv), rt_(rt), nodeColors_(nodeColors), addedColor_(addedColor) {}

    Coloring color(NodeId node, const Multigraph& torsoMinusBag, int paletteSize, int forbidden) override {
        Coloring out(paletteSize);
        if (!conv_.simplified.bags.count(node)) {
            // fresh leaf: at most one peripheral, standing for everything else
            for (VertexId p : torsoMinusBag.vertices()) out.assign(p, smallestAllowed(paletteSize, forbidden));
            return out;
        }
        Torso torso = torso_at(g_, conv_.tcd, node);
        VertexId up = -1;
        if (node != rt_.root) {
            auto it = torso.nodeToPeripheral.find(rt_.parentOf.at(node));
            if (it != torso.nodeToPeripheral.end()) up = it->second;
        }
        const Coloring& f = nodeColors_.at(node);
        for (VertexId p : torsoMinusBag.vertices()) {
            if (p == up) {
                out.assign(p, 1);
                continue;
            }
            const std::vector<NodeId>& comp = torso.peripheralMap.at(p);
            if (comp.size() == 1 && !conv_.simplified.bags.count(comp.front()))
                out.assign(p, f.color(conv_.tcd.bags.at(comp.front()).front()));
            else
                out.assign(p, addedColor_);
        }
        return out;
    }

private:
    const Multigraph& g_;
    const TreeCutConversion& conv_;
    const RootedTree& rt_;
    const std::map<NodeId, Coloring>& nodeColors_;
    int addedColor_;
};

PipelineResult finishPipeline(const Multigraph& g, TreeCutConversion conv, std::map<NodeId, Coloring> nodeColors,
                              int internalPalette, int addedColor, int d, int eta, int clusteringN) {
    std::map<NodeId, int> kMap;
    for (NodeId t : conv.tcd.tree.vertices()) kMap[t] = conv.simplified.bags.count(t) ? internalPalette : 1;

    long long degSimplified = static_cast<long long>(eta) * d + eta - 1;
    long long degShape = static_cast<long long>(d + 1) * eta * eta + d;
    long long inner = (degShape + 1) * (degSimplified * eta * clusteringN + 1);
    long long xiRun = std::max<long long>(1, conv.measuredAdhesion);
    LiftParameters params = derived_constants(inner, xiRun);

    RootedTree rt = RootedTree::atMinRoot(conv.tcd.tree);
    ConversionProvider provider(g, conv, rt, nodeColors, addedColor);

    PipelineResult res;
    res.coloring = lift(g, conv.tcd, kMap, provider, params, &res.liftStats);
    res.paletteUsed = res.coloring.paletteSize();
    res.innerClustering = inner;
    res.declaredBound = lift_component_bound(params, 1);
    long long xiSym = std::max<long long>(1, std::max(conv.capEtaSquared, conv.capDegSquared));
    res.symbolicBound = xiSym == xiRun ? res.declaredBound : lift_component_bound(derived_constants(inner, xiSym), 1);
    ClusteringReport worst =
        verify_clustering(g, res.coloring, res.coloring.paletteSize(), std::max<long long>(1, g.vertexCount()));
    res.measuredWorst = worst.worstComponentSize;
    res.conversion = std::move(conv);
    return res;
}

}  // namespace

PipelineResult lift_from_torso_colorings(const Multigraph& g, const TreeDecomposition& td, int k,
                                         const TorsoColorer& torsoColorer, int d, int eta, int clusteringN) {
    if (k < 2) throw std::invalid_argument("torso pipeline: k must be at least 2");
    if (clusteringN < 1) throw std::invalid_argument("torso pipeline: clustering bound must be positive");
    if (!torsoColorer) throw std::invalid_argument("torso pipeline: missing torso colorer");
    TreeCutConversion conv = to_tree_cut(g, td, d, eta);
    std::map<NodeId, Coloring> nodeColors;
    for (NodeId t : td.tree.vertices()) {
        TdTorso torso = td_torso_at(g, td, t);
        Coloring f = torsoColorer(t, torso.graph);
        ClusteringReport cr = verify_clustering(torso.graph, f, k, clusteringN);
        if (!cr.ok)
            throw std::logic_error("torso pipeline: torso colorer contract broken at node " + std::to_string(t) +
                                   ": " + cr.problem);
        nodeColors.emplace(t, std::move(f));
    }
    return finishPipeline(g, std::move(conv), std::move(nodeColors), k, 1, d, eta, clusteringN);
}

PipelineResult lift_from_bag_colorings(const Multigraph& g, const TreeDecomposition& td, int k,
                                       const BagColorer& bagColorer, int d, int eta, int clusteringN) {
    if (k < 1) throw std::invalid_argument("bag pipeline: k must be at least 1");
    if (clusteringN < 1) throw std::invalid_argument("bag pipeline: clustering bound must be positive");
    if (!bagColorer) throw std::invalid_argument("bag pipeline: missing bag colorer");
    TreeCutConversion conv = to_tree_cut(g, td, d, eta);
    std::map<NodeId, Coloring> nodeColors;
    for (NodeId t : td.tree.vertices()) {
        Multigraph bagGraph = g.inducedSubgraph(sortedUnique(td.bags.at(t)));
        Coloring f = bagColorer(t, bagGraph);
        ClusteringReport cr = verify_clustering(bagGraph, f, k, clusteringN);
        if (!cr.ok)
            throw std::logic_error("bag pipeline: bag colorer contract broken at node " + std::to_string(t) + ": " +
                                   cr.problem);
        nodeColors.emplace(t, std::move(f));
    }
    return finishPipeline(g, std::move(conv), std::move(nodeColors), k + 1, k + 1, d, eta, clusteringN);
}

}  // namespace cluscol
