#include "cluscol/coloring.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace cluscol {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("coloring: " + msg); }

}  // namespace

Coloring::Coloring(int paletteSize, std::map<VertexId, int> assignment)
    : paletteSize_(paletteSize), assignment_(std::move(assignment)) {
    for (const auto& [v, c] : assignment_) {
        if (c < 1 || c > paletteSize_)
            fail("color " + std::to_string(c) + " of vertex " + std::to_string(v) + " outside palette");
    }
}

void Coloring::setPaletteSize(int k) {
    if (k < maxColorUsed()) fail("palette shrink below used colors");
    paletteSize_ = k;
}

int Coloring::color(VertexId v) const {
    auto it = assignment_.find(v);
    if (it == assignment_.end()) fail("vertex " + std::to_string(v) + " has no color");
    return it->second;
}

void Coloring::assign(VertexId v, int c) {
    if (c < 1 || c > paletteSize_)
        fail("color " + std::to_string(c) + " outside palette [1.." + std::to_string(paletteSize_) + "]");
    assignment_[v] = c;
}

int Coloring::maxColorUsed() const {
    int m = 0;
    for (const auto& [v, c] : assignment_) m = std::max(m, c);
    return m;
}

bool Coloring::totalOn(const Multigraph& g) const {
    for (VertexId v : g.vertices())
        if (!assignment_.count(v)) return false;
    return true;
}

std::vector<std::vector<VertexId>> monochromatic_components(const Multigraph& g, const Coloring& c) {
    std::vector<std::vector<VertexId>> parts;
    std::set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (!c.isAssigned(s) || seen.count(s)) continue;
        int col = c.color(s);
        std::vector<VertexId> part;
        std::deque<VertexId> todo{s};
        seen.insert(s);
        while (!todo.empty()) {
            VertexId v = todo.front();
            todo.pop_front();
            part.push_back(v);
            for (EdgeId e : g.incidentEdges(v)) {
                const EdgeRec& r = g.edge(e);
                if (r.isLoop()) continue;
                VertexId w = r.otherEnd(v);
                if (c.isAssigned(w) && c.color(w) == col && seen.insert(w).second) todo.push_back(w);
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

ClusteringReport verify_clustering(const Multigraph& g, const Coloring& c, int k, long long maxComponent) {
    ClusteringReport rep;
    if (k < 0 || maxComponent < 0) fail("negative verification bound");
    if (!c.totalOn(g)) {
        rep.problem = "coloring not total on graph";
        return rep;
    }
    if (c.paletteSize() > k) {
        rep.problem = "palette size " + std::to_string(c.paletteSize()) + " exceeds " + std::to_string(k);
        return rep;
    }
    rep.ok = true;
    for (const auto& part : monochromatic_components(g, c)) {
        if (static_cast<long long>(part.size()) > rep.worstComponentSize)
            rep.worstComponentSize = static_cast<int>(part.size());
        if (rep.ok && static_cast<long long>(part.size()) > maxComponent) {
            rep.ok = false;
            rep.witness = part;
            rep.problem = "monochromatic component of size " + std::to_string(part.size()) +
                          " exceeds " + std::to_string(maxComponent);
        }
    }
    return rep;
}

namespace {

// Perfect matching in the bipartite complement of the conflict graph, by
// augmenting paths. Left colors are scanned ascending and each tries the
// smallest complement-neighbor first, so the permutation is deterministic.
std::vector<int> complement_matching(int k, const std::set<std::pair<int, int>>& conflict) {
    std::vector<std::vector<int>> allowed(k + 1);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (!conflict.count({i, j})) allowed[i].push_back(j);
    std::vector<int> matchOfB(k + 1, 0), matchOfA(k + 1, 0);
    std::function<bool(int, std::vector<char>&)> tryAugment = [&](int a, std::vector<char>& visited) {
        for (int b : allowed[a]) {
            if (visited[b]) continue;
            visited[b] = 1;
            if (matchOfB[b] == 0 || tryAugment(matchOfB[b], visited)) {
                matchOfB[b] = a;
                matchOfA[a] = b;
                return true;
            }
        }
        return false;
    };
    for (int a = 1; a <= k; ++a) {
        std::vector<char> visited(k + 1, 0);
        if (!tryAugment(a, visited))
            throw std::logic_error("merge_across_cut: bipartite complement has no perfect matching");
    }
    return matchOfA;
}

}  // namespace

Coloring merge_across_cut(const Multigraph& g, const EdgeCut& cut, const Coloring& cA, const Coloring& cB,
                          int k, long long maxComponent) {
    if (k < 1) fail("merge needs k >= 1");
    if (cut.order() > k - 1)
        fail("cut order " + std::to_string(cut.order()) + " exceeds k-1 = " + std::to_string(k - 1));

    std::set<VertexId> inA(cut.sideA.begin(), cut.sideA.end());
    std::set<VertexId> inB(cut.sideB.begin(), cut.sideB.end());
    if (static_cast<int>(inA.size() + inB.size()) != g.vertexCount()) fail("cut sides do not partition V(g)");
    for (VertexId v : g.vertices())
        if (inA.count(v) + inB.count(v) != 1) fail("cut sides do not partition V(g)");
    EdgeCut recomputed = make_edge_cut(g, cut.sideA);
    if (recomputed.crossing != cut.crossing) fail("cut crossing set does not match its sides");

    Multigraph ga = g.inducedSubgraph(cut.sideA);
    Multigraph gb = g.inducedSubgraph(cut.sideB);
    ClusteringReport ra = verify_clustering(ga, cA, k, maxComponent);
    if (!ra.ok) fail("sideA coloring invalid: " + ra.problem);
    ClusteringReport rb = verify_clustering(gb, cB, k, maxComponent);
    if (!rb.ok) fail("sideB coloring invalid: " + rb.problem);

    std::set<std::pair<int, int>> conflict;
    for (EdgeId e : cut.crossing) {
        const EdgeRec& r = g.edge(e);
        VertexId a = inA.count(r.u) ? r.u : r.v;
        VertexId b = r.otherEnd(a);
        conflict.insert({cA.color(a), cB.color(b)});
    }
    std::vector<int> sigma = complement_matching(k, conflict);

    Coloring out(k);
    for (VertexId v : cut.sideA) out.assign(v, sigma[cA.color(v)]);
    for (VertexId v : cut.sideB) out.assign(v, cB.color(v));

    for (EdgeId e : cut.crossing) {
        const EdgeRec& r = g.edge(e);
        if (out.color(r.u) == out.color(r.v))
            throw std::logic_error("merge_across_cut: crossing edge stayed monochromatic");
    }
    ClusteringReport rm = verify_clustering(g, out, k, maxComponent);
    if (!rm.ok) throw std::logic_error("merge_across_cut: merged clustering violated: " + rm.problem);
    return out;
}

long long rebound_after_extra_edges(const Multigraph& g, const Multigraph& gPrime, const Coloring& c,
                                    long long maxComponent) {
    if (g.vertices() != gPrime.vertices()) fail("rebound: vertex sets differ");
    long long extra = 0;
    for (const EdgeRec& e : g.edges()) {
        if (!gPrime.hasEdge(e.id)) {
            ++extra;
            continue;
        }
        const EdgeRec& p = gPrime.edge(e.id);
        if (p.u != e.u || p.v != e.v) fail("rebound: edge " + std::to_string(e.id) + " changed endpoints");
    }
    for (const EdgeRec& e : gPrime.edges())
        if (!g.hasEdge(e.id)) fail("rebound: gPrime has edge " + std::to_string(e.id) + " absent from g");

    ClusteringReport rp = verify_clustering(gPrime, c, c.paletteSize(), maxComponent);
    if (!rp.ok) fail("rebound: base coloring invalid: " + rp.problem);

    long long bound = (extra + 1) * maxComponent;
    ClusteringReport rg = verify_clustering(g, c, c.paletteSize(), bound);
    if (!rg.ok) throw std::logic_error("rebound_after_extra_edges: bound violated: " + rg.problem);
    return bound;
}

}  // namespace cluscol
