#include "cluscol/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace cluscol {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("multigraph: " + msg); }

}  // namespace

Multigraph::Multigraph(int vertexCount, const std::vector<std::pair<VertexId, VertexId>>& edgeList) {
    if (vertexCount < 0) fail("negative vertex count");
    vertices_.resize(vertexCount);
    for (int i = 0; i < vertexCount; ++i) vertices_[i] = i;
    edges_.reserve(edgeList.size());
    for (int i = 0; i < static_cast<int>(edgeList.size()); ++i) {
        edges_.push_back(EdgeRec{i, edgeList[i].first, edgeList[i].second});
    }
    buildIndex();
}

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<EdgeRec> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end(), [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
    buildIndex();
}

void Multigraph::buildIndex() {
    vidx_.clear();
    eidx_.clear();
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        VertexId v = vertices_[i];
        if (v < 0) fail("negative vertex id " + std::to_string(v));
        if (!vidx_.emplace(v, i).second) fail("duplicate vertex id " + std::to_string(v));
    }
    incident_.assign(vertices_.size(), {});
    degree_.assign(vertices_.size(), 0);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const EdgeRec& e = edges_[i];
        if (e.id < 0) fail("negative edge id " + std::to_string(e.id));
        if (!eidx_.emplace(e.id, i).second) fail("duplicate edge id " + std::to_string(e.id));
        auto iu = vidx_.find(e.u);
        auto iv = vidx_.find(e.v);
        if (iu == vidx_.end() || iv == vidx_.end())
            fail("edge " + std::to_string(e.id) + " references unknown vertex");
        incident_[iu->second].push_back(e.id);
        degree_[iu->second] += 1;
        degree_[iv->second] += 1;  // a loop lands here twice via both branches
        if (!e.isLoop()) incident_[iv->second].push_back(e.id);
    }
    for (auto& lst : incident_) std::sort(lst.begin(), lst.end());
}

const EdgeRec& Multigraph::edge(EdgeId e) const {
    auto it = eidx_.find(e);
    if (it == eidx_.end()) fail("unknown edge id " + std::to_string(e));
    return edges_[it->second];
}

int Multigraph::degree(VertexId v) const {
    auto it = vidx_.find(v);
    if (it == vidx_.end()) fail("unknown vertex id " + std::to_string(v));
    return degree_[it->second];
}

int Multigraph::maxDegree() const {
    int d = 0;
    for (int x : degree_) d = std::max(d, x);
    return d;
}

const std::vector<EdgeId>& Multigraph::incidentEdges(VertexId v) const {
    auto it = vidx_.find(v);
    if (it == vidx_.end()) fail("unknown vertex id " + std::to_string(v));
    return incident_[it->second];
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
    std::set<VertexId> out;
    for (EdgeId e : incidentEdges(v)) {
        const EdgeRec& r = edge(e);
        if (!r.isLoop()) out.insert(r.otherEnd(v));
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
    std::vector<std::vector<VertexId>> parts;
    std::set<VertexId> seen;
    for (VertexId s : vertices_) {
        if (seen.count(s)) continue;
        std::vector<VertexId> part;
        std::deque<VertexId> todo{s};
        seen.insert(s);
        while (!todo.empty()) {
            VertexId v = todo.front();
            todo.pop_front();
            part.push_back(v);
            for (EdgeId e : incidentEdges(v)) {
                const EdgeRec& r = edge(e);
                if (r.isLoop()) continue;
                VertexId w = r.otherEnd(v);
                if (seen.insert(w).second) todo.push_back(w);
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

Multigraph Multigraph::inducedSubgraph(const std::vector<VertexId>& keep) const {
    std::set<VertexId> ks;
    for (VertexId v : keep) {
        if (!hasVertex(v)) fail("inducedSubgraph: unknown vertex id " + std::to_string(v));
        ks.insert(v);
    }
    std::vector<EdgeRec> es;
    for (const EdgeRec& e : edges_) {
        if (ks.count(e.u) && ks.count(e.v)) es.push_back(e);
    }
    return Multigraph(std::vector<VertexId>(ks.begin(), ks.end()), std::move(es));
}

Multigraph Multigraph::withoutEdges(const std::vector<EdgeId>& del) const {
    std::set<EdgeId> ds;
    for (EdgeId e : del) {
        if (!hasEdge(e)) fail("withoutEdges: unknown edge id " + std::to_string(e));
        ds.insert(e);
    }
    std::vector<EdgeRec> es;
    for (const EdgeRec& e : edges_) {
        if (!ds.count(e.id)) es.push_back(e);
    }
    return Multigraph(vertices_, std::move(es));
}

EdgeCut make_edge_cut(const Multigraph& g, const std::vector<VertexId>& sideA) {
    EdgeCut cut;
    std::set<VertexId> a;
    for (VertexId v : sideA) {
        if (!g.hasVertex(v)) fail("cut side references unknown vertex " + std::to_string(v));
        if (!a.insert(v).second) fail("cut side repeats vertex " + std::to_string(v));
    }
    for (VertexId v : g.vertices()) {
        if (a.count(v)) cut.sideA.push_back(v);
        else cut.sideB.push_back(v);
    }
    for (const EdgeRec& e : g.edges()) {
        if (e.isLoop()) continue;
        if (a.count(e.u) != a.count(e.v)) cut.crossing.push_back(e.id);
    }
    return cut;
}

namespace {

// Unit-capacity max flow on the non-loop edges, with synthetic terminals for
// source/sink vertex sets. Scales are tiny everywhere this is used.
class FlowNet {
public:
    explicit FlowNet(const Multigraph& g) {
        int n = 0;
        for (VertexId v : g.vertices()) id_[v] = n++;
        src_ = n;
        snk_ = n + 1;
        adj_.assign(n + 2, {});
        for (const EdgeRec& e : g.edges()) {
            if (e.isLoop()) continue;
            addArcPair(id_[e.u], id_[e.v], 1, 1);
        }
        inf_ = g.edgeCount() + 1;
    }

    int maxFlow(const std::vector<VertexId>& sources, const std::vector<VertexId>& sinks) {
        std::vector<Arc> backupArcs;
        std::vector<size_t> backupSizes(adj_.size());
        for (size_t i = 0; i < adj_.size(); ++i) backupSizes[i] = adj_[i].size();
        for (VertexId s : sources) addArcPair(src_, id_.at(s), inf_, 0);
        for (VertexId t : sinks) addArcPair(id_.at(t), snk_, inf_, 0);
        int flow = 0;
        while (bfs()) {
            iter_.assign(adj_.size(), 0);
            while (int pushed = dfs(src_, inf_)) flow += pushed;
        }
        for (size_t i = 0; i < adj_.size(); ++i) adj_[i].resize(backupSizes[i]);
        for (auto& node : adj_)
            for (Arc& a : node) a.cap = a.orig;
        return flow;
    }

private:
    struct Arc {
        int to, rev, cap, orig;
    };

    void addArcPair(int a, int b, int capAB, int capBA) {
        adj_[a].push_back({b, static_cast<int>(adj_[b].size()), capAB, capAB});
        adj_[b].push_back({a, static_cast<int>(adj_[a].size()) - 1, capBA, capBA});
    }

    bool bfs() {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[src_] = 0;
        q.push(src_);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : adj_[v]) {
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[snk_] >= 0;
    }

    int dfs(int v, int f) {
        if (v == snk_) return f;
        for (size_t& i = iter_[v]; i < adj_[v].size(); ++i) {
            Arc& a = adj_[v][i];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            int d = dfs(a.to, std::min(f, a.cap));
            if (d > 0) {
                a.cap -= d;
                adj_[a.to][a.rev].cap += d;
                return d;
            }
        }
        return 0;
    }

    std::map<VertexId, int> id_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
    int src_ = 0, snk_ = 0, inf_ = 0;
};

int cutOrderOf(const Multigraph& g, const std::set<VertexId>& side) {
    int c = 0;
    for (const EdgeRec& e : g.edges()) {
        if (e.isLoop()) continue;
        if (side.count(e.u) != side.count(e.v)) ++c;
    }
    return c;
}

}  // namespace

EdgeCut min_edge_cut(const Multigraph& g) {
    if (g.vertexCount() < 2) fail("min_edge_cut needs at least two vertices");
    const std::vector<VertexId>& vs = g.vertices();
    FlowNet net(g);

    VertexId v0 = vs.front();
    int lambda = std::numeric_limits<int>::max();
    for (VertexId t : vs) {
        if (t == v0) continue;
        lambda = std::min(lambda, net.maxFlow({v0}, {t}));
        if (lambda == 0) break;
    }

    // Grow the lexicographically smallest side achieving order lambda. A
    // candidate prefix P is viable when some min-cut side S has P as the
    // prefix of its ascending vertex sequence, i.e. S contains P and nothing
    // smaller than max(P) outside P.
    std::set<VertexId> prefix{v0};
    auto viable = [&](const std::vector<VertexId>& include, const std::vector<VertexId>& exclude) {
        if (!exclude.empty()) return net.maxFlow(include, exclude) == lambda;
        for (VertexId t : vs) {
            bool inside = std::binary_search(include.begin(), include.end(), t);
            if (!inside && net.maxFlow(include, {t}) == lambda) return true;
        }
        return false;
    };
    while (true) {
        if (static_cast<int>(prefix.size()) < g.vertexCount() && cutOrderOf(g, prefix) == lambda) break;
        VertexId last = *prefix.rbegin();
        bool extended = false;
        for (VertexId v : vs) {
            if (v <= last || prefix.count(v)) continue;
            std::vector<VertexId> include(prefix.begin(), prefix.end());
            include.push_back(v);
            std::sort(include.begin(), include.end());
            if (static_cast<int>(include.size()) == g.vertexCount()) continue;
            std::vector<VertexId> exclude;
            for (VertexId w : vs) {
                if (w < v && !prefix.count(w)) exclude.push_back(w);
            }
            if (viable(include, exclude)) {
                prefix.insert(v);
                extended = true;
                break;
            }
        }
        if (!extended) throw std::logic_error("min_edge_cut: no viable extension for prefix");
    }
    return make_edge_cut(g, {prefix.begin(), prefix.end()});
}

}  // namespace cluscol
