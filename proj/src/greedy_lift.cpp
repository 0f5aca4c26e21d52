#include "cluscol/greedy_lift.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "cluscol/oracle.hpp"
#include "cluscol/rooted_tree.hpp"

namespace cluscol {

LiftParameters derived_constants(long long clusteringN, long long xi) {
    if (clusteringN < 1 || xi < 1) throw std::invalid_argument("derived_constants: N and xi must be positive");
    if (xi > 10000) throw std::invalid_argument("derived_constants: xi too large for the constant table");
    LiftParameters p;
    p.clusteringN = clusteringN;
    p.xi = xi;
    BigInt X = xi, N = clusteringN;
    p.n0 = X * X + X;
    p.n1 = 2 * p.n0 * X;
    p.n2 = (1 + 2 * X * X * (X + 1) * N) * p.n1 * p.n1 + p.n0;
    p.f.assign(xi + 1, BigInt(0));
    p.f[1] = p.n0;
    BigInt partial = p.f[1];
    for (long long x = 2; x <= xi; ++x) {
        p.f[x] = (X + 1) * p.n2 * partial;
        partial += p.f[x];
    }
    p.nStar = 1 + (1 + N * X) * (X + 1) * p.n0 * p.f[xi];
    return p;
}

BigInt lift_component_bound(const LiftParameters& params, long long maxBag) {
    return BigInt(std::max<long long>(maxBag, 1)) * params.nStar;
}

namespace {

// Injective recolor into the palette minus the forbidden color, preserving
// the order of the distinct colors actually used. Components are unchanged.
Coloring remapIntoAllowed(const Coloring& c, int paletteSize, int forbidden, const std::string& who) {
    std::set<int> usedSet;
    for (const auto& [v, col] : c.assignment()) usedSet.insert(col);
    std::vector<int> allowed;
    for (int col = 1; col <= paletteSize; ++col)
        if (col != forbidden) allowed.push_back(col);
    if (usedSet.size() > allowed.size())
        throw std::logic_error(who + ": needs " + std::to_string(usedSet.size()) +
                               " colors but only " + std::to_string(allowed.size()) + " are allowed");
    std::map<int, int> remap;
    int pos = 0;
    for (int col : usedSet) remap[col] = allowed[pos++];
    Coloring out(paletteSize);
    for (const auto& [v, col] : c.assignment()) out.assign(v, remap[col]);
    return out;
}

}  // namespace

Coloring CanonicalProvider::color(NodeId, const Multigraph& torsoMinusBag, int paletteSize, int forbidden) {
    if (torsoMinusBag.vertexCount() == 0) return Coloring(paletteSize);
    std::optional<Coloring> found;
    for (int k = 1; k <= torsoMinusBag.vertexCount() && !found; ++k)
        found = find_clustered_coloring(torsoMinusBag, k, clusteringN_, capVertices_);
    if (!found) throw std::logic_error("canonical provider: search failed");
    return remapIntoAllowed(*found, paletteSize, forbidden, "canonical provider");
}

namespace {

struct Fenwick {
    std::vector<int> tree;
    explicit Fenwick(int n) : tree(n + 1, 0) {}
    void add(int i) {
        for (++i; i < static_cast<int>(tree.size()); i += i & -i) ++tree[i];
    }
    int prefix(int i) const {
        int s = 0;
        for (++i; i > 0; i -= i & -i) s += tree[i];
        return s;
    }
    int rangeCount(int lo, int hi) const { return lo > hi ? 0 : prefix(hi) - (lo > 0 ? prefix(lo - 1) : 0); }
};

[[noreturn]] void precondition(const std::string& msg) { throw std::invalid_argument("lift: " + msg); }

// One run of the greedy DFS coloring. Vertices are addressed by dense
// positions; monochromatic components live in a union-find whose roots carry
// the sigma data (gamma, tau) and the sorted bag indices of their members.
// Colors never change once assigned, so components only ever merge.
class LiftEngine {
public:
    LiftEngine(const Multigraph& g, const TreeCutDecomposition& tcd, const std::map<NodeId, int>& kMap,
               TorsoColoringProvider& provider, const LiftParameters& params, LiftStats* stats)
        : g_(g), tcd_(tcd), kMap_(kMap), provider_(provider), params_(params), stats_(stats),
          rt_(RootedTree::atMinRoot(tcd.tree)), bit_(rt_.size()) {
        validate();
        index();
    }

    Coloring run() {
        for (int i = 0; i < rt_.size(); ++i) step(i);
        return finish();
    }

private:
    const Multigraph& g_;
    const TreeCutDecomposition& tcd_;
    const std::map<NodeId, int>& kMap_;
    TorsoColoringProvider& provider_;
    const LiftParameters& params_;
    LiftStats* stats_;
    RootedTree rt_;
    Fenwick bit_;  // colored-vertex count per bag DFS index

    int n_ = 0;
    std::map<VertexId, int> posOf_;
    std::vector<VertexId> verts_;
    std::vector<NodeId> bagNode_;  // per position
    std::vector<int> bagIdx_;      // DFS index of the vertex's node
    std::vector<bool> special_;    // all neighbors inside the vertex's own subtree
    std::vector<VertexId> vertexAtIdx_;            // DFS index -> bag vertex, -1 when empty
    std::map<NodeId, std::vector<EdgeId>> survivingAt_;
    int maxPalette_ = 0;

    std::vector<bool> colored_;
    std::vector<int> colorOf_;
    std::vector<int> parent_, gamma_, tau_;
    std::vector<long long> size_;
    std::vector<std::vector<int>> idxs_;  // sorted bag indices of members, valid at roots
    std::set<int> live_;                  // root positions

    struct SubtreeRecord {
        int rep;  // member position at record time
        int rank;
        int lo, hi;
    };
    std::vector<SubtreeRecord> subtreeChecks_;

    void validate() {
        TcdReport rep = validate_tcd(g_, tcd_);
        if (!rep.ok) precondition(rep.problems.front());
        if (rep.maxBag > 1) precondition("a bag has more than one vertex");
        if (params_.clusteringN < 1 || params_.xi < 1) precondition("parameters must have N >= 1 and xi >= 1");
        for (NodeId t : tcd_.tree.vertices()) {
            auto it = kMap_.find(t);
            if (it == kMap_.end()) precondition("no palette entry for node " + std::to_string(t));
            int bagSz = static_cast<int>(tcd_.bags.at(t).size());
            if (it->second < 1) precondition("palette at node " + std::to_string(t) + " must be positive");
            if (it->second + bagSz < 2)
                precondition("palette plus bag size at node " + std::to_string(t) + " is below 2");
            maxPalette_ = std::max(maxPalette_, it->second + bagSz);
        }
        for (const EdgeRec& te : tcd_.tree.edges()) {
            auto cnt = adhesion_set(g_, tcd_, te.id).size();
            if (static_cast<long long>(cnt) > params_.xi)
                precondition("adhesion " + std::to_string(cnt) + " at tree edge (" + std::to_string(te.u) +
                             "," + std::to_string(te.v) + ") exceeds xi " + std::to_string(params_.xi));
        }
    }

    void index() {
        n_ = g_.vertexCount();
        verts_ = g_.vertices();
        for (int i = 0; i < n_; ++i) posOf_[verts_[i]] = i;
        bagNode_.assign(n_, -1);
        bagIdx_.assign(n_, -1);
        vertexAtIdx_.assign(rt_.size(), -1);
        for (const auto& [t, bag] : tcd_.bags) {
            for (VertexId v : bag) {
                int p = posOf_.at(v);
                bagNode_[p] = t;
                bagIdx_[p] = rt_.indexOf.at(t);
                vertexAtIdx_[bagIdx_[p]] = v;
            }
        }
        for (const EdgeRec& e : g_.edges()) {
            NodeId nu = bagNode_[posOf_.at(e.u)];
            NodeId nv = bagNode_[posOf_.at(e.v)];
            NodeId l = rt_.lca(nu, nv);
            for (NodeId a = nu; a != l; a = rt_.parentOf.at(a)) survivingAt_[a].push_back(e.id);
            for (NodeId b = nv; b != l; b = rt_.parentOf.at(b)) survivingAt_[b].push_back(e.id);
            survivingAt_[l].push_back(e.id);
        }
        for (auto& [t, list] : survivingAt_) std::sort(list.begin(), list.end());
        special_.assign(n_, true);
        for (int p = 0; p < n_; ++p) {
            int lo = bagIdx_[p], hi = rt_.subtreeEnd.at(bagNode_[p]);
            for (VertexId w : g_.neighbors(verts_[p])) {
                int wi = bagIdx_[posOf_.at(w)];
                if (wi < lo || wi > hi) {
                    special_[p] = false;
                    break;
                }
            }
        }
        colored_.assign(n_, false);
        colorOf_.assign(n_, 0);
        parent_.assign(n_, -1);
        gamma_.assign(n_, 0);
        tau_.assign(n_, 0);
        size_.assign(n_, 0);
        idxs_.assign(n_, {});
    }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(int a, int b, int lcaIdx) {
        int ra = find(a), rb = find(b);
        if (ra == rb) {
            gamma_[ra] = std::min(gamma_[ra], lcaIdx);
            return;
        }
        if (idxs_[ra].size() < idxs_[rb].size()) std::swap(ra, rb);
        gamma_[ra] = std::min({gamma_[ra], gamma_[rb], lcaIdx});
        tau_[ra] = std::min(tau_[ra], tau_[rb]);
        size_[ra] += size_[rb];
        std::vector<int> merged;
        merged.reserve(idxs_[ra].size() + idxs_[rb].size());
        std::merge(idxs_[ra].begin(), idxs_[ra].end(), idxs_[rb].begin(), idxs_[rb].end(),
                   std::back_inserter(merged));
        idxs_[ra] = std::move(merged);
        idxs_[rb].clear();
        parent_[rb] = ra;
        live_.erase(rb);
    }

    // sigma = (gamma, tau) lexicographic; total on distinct components since
    // tau values are distinct under unit bags
    bool sigmaLess(int ra, int rb) {
        if (ra == rb) return false;
        if (gamma_[ra] != gamma_[rb]) return gamma_[ra] < gamma_[rb];
        if (tau_[ra] == tau_[rb]) throw std::logic_error("lift: sigma order degenerate");
        return tau_[ra] < tau_[rb];
    }

    bool crosses(int root, int lo, int hi) const {
        const auto& v = idxs_[root];
        auto inside = std::upper_bound(v.begin(), v.end(), hi) - std::lower_bound(v.begin(), v.end(), lo);
        return inside > 0 && inside < static_cast<long long>(v.size());
    }

    long long countInside(int root, int lo, int hi) const {
        const auto& v = idxs_[root];
        return std::upper_bound(v.begin(), v.end(), hi) - std::lower_bound(v.begin(), v.end(), lo);
    }

    void applyColor(int p, int c) {
        colored_[p] = true;
        colorOf_[p] = c;
        parent_[p] = p;
        gamma_[p] = tau_[p] = bagIdx_[p];
        size_[p] = 1;
        idxs_[p] = {bagIdx_[p]};
        live_.insert(p);
        bit_.add(bagIdx_[p]);
        VertexId v = verts_[p];
        for (EdgeId e : g_.incidentEdges(v)) {
            const EdgeRec& r = g_.edge(e);
            if (r.isLoop()) continue;
            int q = posOf_.at(r.otherEnd(v));
            if (!colored_[q] || colorOf_[q] != c) continue;
            int li = rt_.indexOf.at(rt_.lca(bagNode_[p], bagNode_[q]));
            unite(p, q, li);
        }
    }

    int smallestColorAvoiding(int palette, int banned) const {
        for (int c = 1; c <= palette; ++c)
            if (c != banned) return c;
        throw std::logic_error("lift: no color available");
    }

    void step(int i) {
        NodeId t = rt_.order[i];
        int lo = i, hi = rt_.subtreeEnd.at(t);
        if (stats_) ++stats_->steps;

        long long wi = bit_.rangeCount(lo, hi);
        if (BigInt(wi) > params_.n0)
            throw ClaimViolation("lift: " + std::to_string(wi) + " colored vertices below node " +
                                 std::to_string(t) + ", limit " + params_.n0.str());
        if (stats_) ++stats_->windowChecks;

        std::vector<int> crossingRoots;
        for (int r : live_)
            if (i > 0 && crosses(r, lo, hi)) crossingRoots.push_back(r);
        std::sort(crossingRoots.begin(), crossingRoots.end(), [&](int a, int b) { return sigmaLess(a, b); });
        std::vector<std::pair<int, long long>> growthBase;
        for (int rank = 1; rank <= static_cast<int>(crossingRoots.size()); ++rank) {
            int r = crossingRoots[rank - 1];
            if (rank > params_.xi)
                throw ClaimViolation("lift: " + std::to_string(crossingRoots.size()) +
                                     " components cross the edge above node " + std::to_string(t) +
                                     ", limit " + std::to_string(params_.xi));
            subtreeChecks_.push_back({r, rank, lo, hi});
            growthBase.push_back({r, size_[r]});
        }

        const auto& bag = tcd_.bags.at(t);
        int bagPos = bag.empty() ? -1 : posOf_.at(bag.front());
        int palette = kMap_.at(t) + static_cast<int>(bag.size());

        int ell = 0;
        if (bagPos >= 0) {
            if (colored_[bagPos]) {
                ell = colorOf_[bagPos];
            } else {
                int best = -1;
                auto it = survivingAt_.find(t);
                if (it != survivingAt_.end()) {
                    for (EdgeId e : it->second) {
                        const EdgeRec& r = g_.edge(e);
                        if (r.isLoop()) continue;
                        int pu = posOf_.at(r.u), pv = posOf_.at(r.v);
                        if (pu == bagPos || pv == bagPos) continue;
                        for (auto [a, b] : {std::pair{pu, pv}, std::pair{pv, pu}}) {
                            if (colored_[a] || !colored_[b]) continue;
                            int root = find(b);
                            if (!crosses(root, lo, hi)) continue;
                            if (best < 0 || sigmaLess(root, best)) best = root;
                        }
                    }
                }
                ell = best < 0 ? 1 : colorOf_[best];
            }
        }

        Torso torso = torso_at(g_, tcd_, t);
        std::vector<VertexId> periph;
        for (const auto& [p, nodes] : torso.peripheralMap) periph.push_back(p);
        Multigraph torsoMinusBag = torso.graph.inducedSubgraph(periph);
        Coloring cp = provider_.color(t, torsoMinusBag, palette, ell);
        ClusteringReport cpRep = verify_clustering(torsoMinusBag, cp, palette, params_.clusteringN);
        if (!cpRep.ok)
            throw std::logic_error("lift: provider contract broken at node " + std::to_string(t) + ": " +
                                   cpRep.problem);
        if (ell >= 1)
            for (const auto& [v, c] : cp.assignment())
                if (c == ell)
                    throw std::logic_error("lift: provider used the forbidden color at node " +
                                           std::to_string(t));

        // relevant = endpoint of an edge surviving at t
        std::set<int> relevant;
        if (auto it = survivingAt_.find(t); it != survivingAt_.end()) {
            for (EdgeId e : it->second) {
                relevant.insert(posOf_.at(g_.edge(e).u));
                relevant.insert(posOf_.at(g_.edge(e).v));
            }
        }

        // decisions against the state before this step; the bag vertex's new
        // color must not be visible here
        std::vector<std::pair<int, int>> assignments;
        for (int p : relevant) {
            if (p == bagPos || colored_[p]) continue;
            VertexId peripheral = torso.nodeToPeripheral.at(bagNode_[p]);
            int def = cp.color(peripheral);
            int best = -1;
            for (EdgeId e : g_.incidentEdges(verts_[p])) {
                const EdgeRec& r = g_.edge(e);
                if (r.isLoop()) continue;
                int q = posOf_.at(r.otherEnd(verts_[p]));
                if (!colored_[q]) continue;
                int root = find(q);
                if (best < 0 || sigmaLess(root, best)) best = root;
            }
            int chosen;
            if (best < 0 || colorOf_[best] != def)
                chosen = def;
            else
                chosen = smallestColorAvoiding(palette, colorOf_[best]);
            assignments.push_back({p, chosen});
        }
        if (bagPos >= 0 && !colored_[bagPos]) applyColor(bagPos, ell);
        for (auto [p, c] : assignments) applyColor(p, c);

        // special vertices below t, judged against the state just built;
        // they are pairwise nonadjacent, so simultaneous coloring is safe
        std::set<int> relevantRoots;
        for (int p : relevant)
            if (colored_[p]) relevantRoots.insert(find(p));
        std::vector<std::pair<int, int>> specialAssignments;
        for (int j = lo + 1; j <= hi; ++j) {
            VertexId v = vertexAtIdx_[j];
            if (v < 0) continue;
            int p = posOf_.at(v);
            if (colored_[p] || !special_[p]) continue;
            int best = -1;
            for (EdgeId e : g_.incidentEdges(v)) {
                const EdgeRec& r = g_.edge(e);
                if (r.isLoop()) continue;
                int q = posOf_.at(r.otherEnd(v));
                if (!colored_[q]) continue;
                int root = find(q);
                if (!relevantRoots.count(root)) continue;
                if (best < 0 || sigmaLess(root, best)) best = root;
            }
            if (best < 0) continue;
            specialAssignments.push_back({p, smallestColorAvoiding(palette, colorOf_[best])});
        }
        for (auto [p, c] : specialAssignments) applyColor(p, c);

        for (auto [r, before] : growthBase) {
            long long grown = size_[find(r)] - before;
            if (BigInt(grown) > params_.n2)
                throw ClaimViolation("lift: component grew by " + std::to_string(grown) + " at node " +
                                     std::to_string(t) + ", limit " + params_.n2.str());
            if (stats_) ++stats_->growthChecks;
        }
    }

    Coloring finish() {
        for (const SubtreeRecord& rec : subtreeChecks_) {
            long long inside = countInside(find(rec.rep), rec.lo, rec.hi);
            if (BigInt(inside) > params_.f[rec.rank])
                throw ClaimViolation("lift: rank-" + std::to_string(rec.rank) + " component keeps " +
                                     std::to_string(inside) + " vertices in a subtree, limit " +
                                     params_.f[rec.rank].str());
            if (stats_) ++stats_->subtreeChecks;
        }
        Coloring out(maxPalette_ > 0 ? maxPalette_ : 1);
        for (int p = 0; p < n_; ++p) {
            if (!colored_[p]) throw std::logic_error("lift: vertex left uncolored");
            out.assign(verts_[p], colorOf_[p]);
        }
        ClusteringReport rep = verify_clustering(g_, out, out.paletteSize(), std::max(1, g_.vertexCount()));
        if (!rep.ok) throw std::logic_error("lift: output rejected: " + rep.problem);
        if (BigInt(rep.worstComponentSize) > params_.nStar)
            throw ClaimViolation("lift: final component of " + std::to_string(rep.worstComponentSize) +
                                 " vertices exceeds " + params_.nStar.str());
        return out;
    }
};

}  // namespace

Coloring lift_unit_bags(const Multigraph& g, const TreeCutDecomposition& tcd,
                        const std::map<NodeId, int>& kMap, TorsoColoringProvider& provider,
                        const LiftParameters& params, LiftStats* stats) {
    LiftEngine engine(g, tcd, kMap, provider, params, stats);
    return engine.run();
}

Coloring lift(const Multigraph& g, const TreeCutDecomposition& tcd, const std::map<NodeId, int>& kMap,
              TorsoColoringProvider& provider, const LiftParameters& params, LiftStats* stats) {
    TcdReport rep = validate_tcd(g, tcd);
    if (!rep.ok) precondition(rep.problems.front());
    if (rep.maxBag <= 1) return lift_unit_bags(g, tcd, kMap, provider, params, stats);

    ContractResult contracted = contract_bags(g, tcd);
    Coloring inner = lift_unit_bags(contracted.gPrime, contracted.tcdPrime, kMap, provider, params, stats);
    Coloring out(inner.paletteSize());
    for (VertexId v : g.vertices()) out.assign(v, inner.color(contracted.liftMap.at(v)));
    ClusteringReport check = verify_clustering(g, out, out.paletteSize(), std::max(1, g.vertexCount()));
    if (!check.ok) throw std::logic_error("lift: pulled-back coloring rejected: " + check.problem);
    if (BigInt(check.worstComponentSize) > lift_component_bound(params, rep.maxBag))
        throw ClaimViolation("lift: pulled-back component of " + std::to_string(check.worstComponentSize) +
                             " vertices exceeds " + lift_component_bound(params, rep.maxBag).str());
    return out;
}

CertReport validate_certificate(const Multigraph& g, const StructureCertificate& cert) {
    CertReport out;
    auto bad = [&](const std::string& msg) { out.problems.push_back(msg); };

    TcdReport tcdRep = validate_tcd(g, cert.tcd);
    if (!tcdRep.ok) {
        for (const auto& p : tcdRep.problems) bad(p);
        return out;
    }
    if (cert.d < 1) bad("degree threshold d must be positive");
    if (cert.xi < 0) bad("xi must be nonnegative");
    if (cert.eta < 0) bad("eta must be nonnegative");
    if (tcdRep.adhesion > cert.eta)
        bad("adhesion " + std::to_string(tcdRep.adhesion) + " exceeds eta " + std::to_string(cert.eta));

    const Multigraph& T = cert.tcd.tree;
    for (NodeId t : T.vertices())
        if (!cert.perNode.count(t)) bad("no certificate entry for node " + std::to_string(t));
    for (const auto& [t, nd] : cert.perNode)
        if (!T.hasVertex(t)) bad("certificate entry for unknown node " + std::to_string(t));
    if (!out.problems.empty()) return out;

    for (NodeId t : T.vertices()) {
        const CertNodeData& nd = cert.perNode.at(t);
        std::string at = "node " + std::to_string(t) + ": ";
        if (nd.dt < 0 || nd.dt > cert.d) bad(at + "d_t out of [0, d]");
        if (static_cast<int>(nd.z.size()) > cert.xi) bad(at + "more than xi deleted edges");
        std::set<EdgeId> zset(nd.z.begin(), nd.z.end());
        if (zset.size() != nd.z.size()) bad(at + "duplicate deleted edge");
        for (EdgeId e : nd.z)
            if (!g.hasEdge(e)) bad(at + "deleted edge " + std::to_string(e) + " not in the graph");
        if (!out.problems.empty()) continue;

        Torso torso = torso_at(g, cert.tcd, t);
        std::vector<EdgeId> zHere;
        for (EdgeId e : nd.z)
            if (torso.graph.hasEdge(e)) zHere.push_back(e);
        Multigraph stripped = torso.graph.withoutEdges(zHere);
        std::set<VertexId> core(torso.coreVertices.begin(), torso.coreVertices.end());

        int heavyHere = 0;
        for (VertexId v : stripped.vertices()) {
            if (stripped.degree(v) < nd.dt) continue;
            ++heavyHere;
            if (!core.count(v)) bad(at + "peripheral vertex " + std::to_string(v) + " reaches degree d_t");
        }
        int heavyH = 0;
        for (VertexId v : cert.hPrime.vertices())
            if (cert.hPrime.degree(v) >= nd.dt) ++heavyH;
        if (heavyHere >= heavyH)
            bad(at + std::to_string(heavyHere) + " heavy vertices, needs fewer than " + std::to_string(heavyH));

        bool leaf = T.vertexCount() >= 2 && T.degree(t) == 1;
        if (!leaf) {
            for (VertexId v : torso.coreVertices)
                if (stripped.degree(v) < nd.dt)
                    bad(at + "bag vertex " + std::to_string(v) + " falls below degree d_t");
        } else if (cert.tcd.bags.at(t).size() > 1) {
            bad(at + "leaf bag holds more than one vertex");
        }
    }
    out.ok = out.problems.empty();
    return out;
}

namespace {

// Per-node torso colorer for certificate assembly: strip Z_t, base-color with
// the node's palette, and let the deleted edges widen the clustering bound.
class CertificateProvider : public TorsoColoringProvider {
public:
    CertificateProvider(const StructureCertificate& cert, const BaseColorer& base,
                        const std::map<NodeId, int>& kt, long long nBase)
        : cert_(cert), base_(base), kt_(kt), nBase_(nBase) {}

    Coloring color(NodeId t, const Multigraph& torsoMinusBag, int paletteSize, int forbidden) override {
        const CertNodeData& nd = cert_.perNode.at(t);
        std::vector<EdgeId> zHere;
        for (EdgeId e : nd.z)
            if (torsoMinusBag.hasEdge(e)) zHere.push_back(e);
        Multigraph stripped = torsoMinusBag.withoutEdges(zHere);
        if (nd.dt > 0 && stripped.maxDegree() > nd.dt - 1)
            throw std::logic_error("certificate assembly: stripped torso at node " + std::to_string(t) +
                                   " exceeds degree d_t - 1");
        int k = kt_.at(t);
        Coloring c0 = base_(stripped, k);
        ClusteringReport rep = verify_clustering(stripped, c0, k, nBase_);
        if (!rep.ok)
            throw std::logic_error("certificate assembly: base colorer contract broken at node " +
                                   std::to_string(t) + ": " + rep.problem);
        rebound_after_extra_edges(torsoMinusBag, stripped, c0, nBase_);
        return remapIntoAllowed(c0, paletteSize, forbidden, "certificate assembly");
    }

private:
    const StructureCertificate& cert_;
    const BaseColorer& base_;
    const std::map<NodeId, int>& kt_;
    long long nBase_;
};

}  // namespace

Coloring color_from_certificate(const Multigraph& g, const StructureCertificate& cert,
                                const BaseColorer& baseColorer, int chi, long long nBase,
                                BigInt* declaredBound, LiftStats* stats) {
    if (chi < 1) throw std::invalid_argument("certificate assembly: chi must be positive");
    if (nBase < 1) throw std::invalid_argument("certificate assembly: base clustering must be positive");
    CertReport rep = validate_certificate(g, cert);
    if (!rep.ok)
        throw std::invalid_argument("certificate assembly: invalid certificate: " + rep.problems.front());

    const Multigraph& T = cert.tcd.tree;
    if (T.vertexCount() == 1) {
        // all bag vertices are heavy, so the vertex count is under |V(hPrime)|
        if (g.vertexCount() >= cert.hPrime.vertexCount())
            throw std::logic_error("certificate assembly: single-node graph too large");
        Coloring out(chi + 1);
        for (VertexId v : g.vertices()) out.assign(v, 1);
        if (declaredBound) *declaredBound = BigInt(cert.hPrime.vertexCount() - 1);
        return out;
    }

    std::map<NodeId, int> kt;
    for (NodeId t : T.vertices()) {
        int bagSz = static_cast<int>(cert.tcd.bags.at(t).size());
        if (T.degree(t) == 1) {
            kt[t] = 2 - bagSz;
        } else if (cert.perNode.at(t).dt == cert.d) {
            if (chi == 1 && bagSz == 0)
                throw std::invalid_argument(
                    "certificate assembly: chi 1 with an empty bag leaves a one-color palette");
            kt[t] = chi;
        } else {
            kt[t] = std::max(chi, 2 - bagSz);
        }
    }

    long long nLift = (cert.xi + 1LL) * nBase;
    LiftParameters params = derived_constants(nLift, std::max(cert.eta, 1));
    CertificateProvider provider(cert, baseColorer, kt, nBase);
    Coloring out = lift(g, cert.tcd, kt, provider, params, stats);
    out.setPaletteSize(chi + 1);
    if (declaredBound) {
        long long maxBag = 0;
        for (const auto& [t, bag] : cert.tcd.bags)
            maxBag = std::max(maxBag, static_cast<long long>(bag.size()));
        *declaredBound = lift_component_bound(params, maxBag);
    }
    return out;
}

namespace {

Coloring smallCutRec(const Multigraph& g, const CertifiedColorer& colorer, int k, long long maxComponent,
                     std::vector<std::vector<VertexId>>* leaves) {
    if (g.vertexCount() == 0) return Coloring(k);
    if (g.vertexCount() == 1) {
        Coloring c(k);
        c.assign(g.vertices().front(), 1);
        if (leaves) leaves->push_back(g.vertices());
        return c;
    }
    EdgeCut cut = min_edge_cut(g);
    if (cut.order() >= 4) {
        Coloring c = colorer(g);
        ClusteringReport rep = verify_clustering(g, c, k, maxComponent);
        if (!rep.ok)
            throw std::logic_error("small-cut recursion: certified colorer contract broken: " + rep.problem);
        if (leaves) leaves->push_back(g.vertices());
        return c;
    }
    Coloring cA = smallCutRec(g.inducedSubgraph(cut.sideA), colorer, k, maxComponent, leaves);
    Coloring cB = smallCutRec(g.inducedSubgraph(cut.sideB), colorer, k, maxComponent, leaves);
    return merge_across_cut(g, cut, cA, cB, k, maxComponent);
}

}  // namespace

Coloring color_via_small_cuts(const Multigraph& g, const CertifiedColorer& certifiedColorer, int k,
                              long long maxComponent, std::vector<std::vector<VertexId>>* leaves) {
    if (k < 4) throw std::invalid_argument("small-cut recursion: k must be at least 4");
    if (maxComponent < 1) throw std::invalid_argument("small-cut recursion: component bound must be positive");
    return smallCutRec(g, certifiedColorer, k, maxComponent, leaves);
}

}  // namespace cluscol
