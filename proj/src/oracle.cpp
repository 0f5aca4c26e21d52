#include "cluscol/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace cluscol {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("oracle: " + msg); }

// Size of the equal-colored component containing position p among the first
// `assigned` vertices. colors is indexed by position in order.
int partialComponentSize(const Multigraph& g, const std::vector<VertexId>& order,
                         const std::map<VertexId, int>& posOf, const std::vector<int>& colors, int p) {
    int col = colors[p];
    std::set<int> seen{p};
    std::deque<int> todo{p};
    int size = 0;
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        ++size;
        for (EdgeId e : g.incidentEdges(order[q])) {
            const EdgeRec& r = g.edge(e);
            if (r.isLoop()) continue;
            auto it = posOf.find(r.otherEnd(order[q]));
            int w = it->second;
            if (w < static_cast<int>(colors.size()) && colors[w] == col && seen.insert(w).second)
                todo.push_back(w);
        }
    }
    return size;
}

struct ColorSearch {
    const Multigraph& g;
    std::vector<VertexId> order;
    std::map<VertexId, int> posOf;
    int k;
    long long maxComponent;

    ColorSearch(const Multigraph& gr, int kk, long long n) : g(gr), k(kk), maxComponent(n) {
        order = g.vertices();
        for (int i = 0; i < static_cast<int>(order.size()); ++i) posOf[order[i]] = i;
    }

    bool feasible(std::vector<int>& colors, int p) const {
        return partialComponentSize(g, order, posOf, colors, p) <= maxComponent;
    }

    // Extends a canonical partial assignment to a full one, smallest first.
    bool extend(std::vector<int>& colors, int maxUsed) const {
        int p = static_cast<int>(colors.size());
        if (p == static_cast<int>(order.size())) return true;
        int top = std::min(k, maxUsed + 1);
        for (int c = 1; c <= top; ++c) {
            colors.push_back(c);
            if (feasible(colors, p) && extend(colors, std::max(maxUsed, c))) return true;
            colors.pop_back();
        }
        return false;
    }

    // All canonical partial assignments of the first `depth` vertices.
    void prefixes(std::vector<int>& colors, int maxUsed, int depth, std::vector<std::vector<int>>& out) const {
        int p = static_cast<int>(colors.size());
        if (p == depth) {
            out.push_back(colors);
            return;
        }
        int top = std::min(k, maxUsed + 1);
        for (int c = 1; c <= top; ++c) {
            colors.push_back(c);
            if (feasible(colors, p)) prefixes(colors, std::max(maxUsed, c), depth, out);
            colors.pop_back();
        }
    }
};

}  // namespace

std::optional<Coloring> find_clustered_coloring(const Multigraph& g, int k, long long maxComponent,
                                                int capVertices, int jobs) {
    if (k < 1) fail("palette must be positive");
    if (maxComponent < 1) fail("component bound must be positive");
    if (g.vertexCount() > capVertices)
        fail("graph has " + std::to_string(g.vertexCount()) + " vertices, search cap is " +
             std::to_string(capVertices));

    ColorSearch search(g, k, maxComponent);
    std::vector<int> found;
    if (jobs <= 1 || g.vertexCount() <= 3) {
        std::vector<int> colors;
        if (!search.extend(colors, 0)) return std::nullopt;
        found = colors;
    } else {
        int depth = std::min(3, g.vertexCount());
        std::vector<std::vector<int>> pre;
        {
            std::vector<int> colors;
            search.prefixes(colors, 0, depth, pre);
        }
        if (pre.empty()) return std::nullopt;
        std::vector<std::optional<std::vector<int>>> results(pre.size());
        std::atomic<int> next{0};
        std::atomic<int> winner{static_cast<int>(pre.size())};
        auto worker = [&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= static_cast<int>(pre.size())) return;
                if (i > winner.load()) continue;
                std::vector<int> colors = pre[i];
                int maxUsed = 0;
                for (int c : colors) maxUsed = std::max(maxUsed, c);
                if (search.extend(colors, maxUsed)) {
                    results[i] = colors;
                    int cur = winner.load();
                    while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        int nThreads = std::min(jobs, static_cast<int>(pre.size()));
        std::vector<std::thread> pool;
        for (int i = 0; i < nThreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        int w = winner.load();
        if (w >= static_cast<int>(pre.size())) return std::nullopt;
        found = *results[w];
    }
    Coloring c(k);
    for (int i = 0; i < static_cast<int>(found.size()); ++i) c.assign(search.order[i], found[i]);
    return c;
}

int min_clustered_colors(const Multigraph& g, long long maxComponent, int capVertices, int jobs) {
    if (g.vertexCount() == 0) return 1;
    for (int k = 1; k <= g.vertexCount(); ++k) {
        if (find_clustered_coloring(g, k, maxComponent, capVertices, jobs)) return k;
    }
    throw std::logic_error("min_clustered_colors: no palette up to |V| worked");
}

namespace {

struct ImmersionSearch {
    const Multigraph& g;
    const Multigraph& h;
    bool strong;
    std::vector<VertexId> hVerts;
    std::vector<EdgeRec> hEdges;                 // routing order
    std::map<VertexId, VertexId> pi;             // current branch map
    std::set<VertexId> piImage;
    std::set<EdgeId> used;
    std::map<EdgeId, std::vector<EdgeId>> paths;

    ImmersionSearch(const Multigraph& gr, const Multigraph& hr, bool s) : g(gr), h(hr), strong(s) {
        hVerts = h.vertices();
        hEdges = h.edges();
        auto degKey = [&](const EdgeRec& e) {
            int du = h.degree(e.u), dv = h.degree(e.v);
            return std::pair<int, int>(std::max(du, dv), std::min(du, dv));
        };
        std::stable_sort(hEdges.begin(), hEdges.end(), [&](const EdgeRec& a, const EdgeRec& b) {
            auto ka = degKey(a), kb = degKey(b);
            if (ka != kb) return ka > kb;
            return a.id < b.id;
        });
    }

    bool mapVertices(size_t idx) {
        if (idx == hVerts.size()) return routeEdge(0);
        VertexId x = hVerts[idx];
        for (VertexId v : g.vertices()) {
            if (piImage.count(v)) continue;
            if (g.degree(v) < h.degree(x)) continue;
            pi[x] = v;
            piImage.insert(v);
            if (mapVertices(idx + 1)) return true;
            pi.erase(x);
            piImage.erase(v);
        }
        return false;
    }

    bool routeEdge(size_t idx) {
        if (idx == hEdges.size()) return true;
        if (static_cast<int>(g.edgeCount() - used.size()) < static_cast<int>(hEdges.size() - idx))
            return false;
        const EdgeRec& he = hEdges[idx];
        VertexId s = pi.at(he.u);
        VertexId t = pi.at(he.v);
        std::vector<EdgeId> walk;
        std::set<VertexId> visited{s};
        return growWalk(idx, he, s, t, walk, visited);
    }

    // Extends the walk for edge hEdges[idx] from cur toward target. Walks are
    // simple paths (cycles when target == start); crossing another branch
    // image mid-walk is rejected in strong mode.
    bool growWalk(size_t idx, const EdgeRec& he, VertexId cur, VertexId target, std::vector<EdgeId>& walk,
                  std::set<VertexId>& visited) {
        for (EdgeId e : g.incidentEdges(cur)) {
            if (used.count(e)) continue;
            const EdgeRec& r = g.edge(e);
            if (r.isLoop() && !(cur == target && walk.empty() && he.isLoop())) continue;
            VertexId w = r.isLoop() ? cur : r.otherEnd(cur);
            if (w == target && (!he.isLoop() || !walk.empty() || r.isLoop())) {
                walk.push_back(e);
                used.insert(e);
                paths[he.id] = walk;
                if (routeEdge(idx + 1)) return true;
                paths.erase(he.id);
                used.erase(e);
                walk.pop_back();
                continue;
            }
            if (w == target) continue;  // a loop-edge walk must leave s before returning
            if (visited.count(w)) continue;
            if (strong && piImage.count(w)) continue;
            walk.push_back(e);
            used.insert(e);
            visited.insert(w);
            if (growWalk(idx, he, w, target, walk, visited)) return true;
            visited.erase(w);
            used.erase(e);
            walk.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<ImmersionWitness> has_immersion(const Multigraph& g, const Multigraph& h, bool strong,
                                              const OracleCaps& caps) {
    if (g.vertexCount() > caps.immersionVertices)
        fail("host graph has " + std::to_string(g.vertexCount()) + " vertices, immersion cap is " +
             std::to_string(caps.immersionVertices));
    if (g.edgeCount() > caps.immersionEdges)
        fail("host graph has " + std::to_string(g.edgeCount()) + " edges, immersion cap is " +
             std::to_string(caps.immersionEdges));
    if (h.vertexCount() > g.vertexCount() || h.edgeCount() > g.edgeCount()) return std::nullopt;

    ImmersionSearch search(g, h, strong);
    if (!search.mapVertices(0)) return std::nullopt;
    ImmersionWitness wit;
    wit.vertexMap = search.pi;
    wit.pathMap = search.paths;
    wit.strong = strong;
    return wit;
}

Multigraph gen_apex_blocker(const Multigraph& base, int eta) {
    if (eta < 1) fail("gen_apex_blocker needs eta >= 1");
    int nl = base.vertexCount();
    std::map<VertexId, int> rank;
    for (int i = 0; i < nl; ++i) rank[base.vertices()[i]] = i;
    int apex = eta * nl;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int j = 0; j < eta; ++j) {
        for (const EdgeRec& e : base.edges())
            edges.push_back({j * nl + rank[e.u], j * nl + rank[e.v]});
    }
    for (int v = 0; v < apex; ++v) edges.push_back({apex, v});
    return Multigraph(apex + 1, edges);
}

Multigraph gen_layered_blocker(const Multigraph& base, long long maxComponent) {
    if (maxComponent < 1) fail("gen_layered_blocker needs a positive component bound");
    long long n = maxComponent;
    int nl = base.vertexCount();
    std::map<VertexId, int> rank;
    for (int i = 0; i < nl; ++i) rank[base.vertices()[i]] = i;
    long long copies = 2 * n - 1;
    long long total = (n + 1) + n * copies * nl;
    if (total > 2'000'000) fail("gen_layered_blocker output too large");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (long long i = 0; i < n; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    for (long long layer = 1; layer <= n; ++layer) {
        for (long long j = 0; j < copies; ++j) {
            int blockBase = static_cast<int>((n + 1) + ((layer - 1) * copies + j) * nl);
            for (const EdgeRec& e : base.edges())
                edges.push_back({blockBase + rank[e.u], blockBase + rank[e.v]});
            for (int v = 0; v < nl; ++v) {
                edges.push_back({blockBase + v, static_cast<int>(layer - 1)});
                edges.push_back({blockBase + v, static_cast<int>(layer)});
            }
        }
    }
    return Multigraph(static_cast<int>(total), edges);
}

BigInt degree_one_bound(int h) {
    if (h < 2) fail("degree_one_bound needs h >= 2");
    BigInt b = 1;
    for (int i = 0; i < h; ++i) b *= (h - 1);
    return b;
}

namespace {

bool hasPathOnVertices(const Multigraph& g, int target) {
    if (target <= 1) return g.vertexCount() >= target;
    std::set<VertexId> visited;
    std::function<bool(VertexId, int)> dfs = [&](VertexId v, int len) {
        if (len >= target) return true;
        visited.insert(v);
        for (VertexId w : g.neighbors(v)) {
            if (!visited.count(w) && dfs(w, len + 1)) return true;
        }
        visited.erase(v);
        return false;
    };
    for (VertexId v : g.vertices())
        if (dfs(v, 1)) return true;
    return false;
}

}  // namespace

DegreeOneCheck degree_one_check(const Multigraph& g, int h) {
    DegreeOneCheck res;
    res.bound = degree_one_bound(h);
    bool star = false;
    for (VertexId v : g.vertices())
        if (static_cast<int>(g.neighbors(v).size()) >= h) star = true;
    res.preconditionsHold = !star && !hasPathOnVertices(g, h);
    for (const auto& comp : g.components())
        res.largestComponent = std::max(res.largestComponent, static_cast<long long>(comp.size()));
    res.ok = res.preconditionsHold && BigInt(res.largestComponent) <= res.bound;
    return res;
}

}  // namespace cluscol
