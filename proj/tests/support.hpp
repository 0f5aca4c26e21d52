#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cluscol/multigraph.hpp"

// Independent reimplementations used as ground truth. Nothing here calls the
// library beyond the Multigraph accessors under test.
namespace testsupport {

using cluscol::EdgeRec;
using cluscol::Multigraph;
using cluscol::VertexId;

inline Multigraph path(int n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Multigraph(n, e);
}

inline Multigraph cycle(int n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Multigraph(n, e);
}

inline Multigraph complete(int n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Multigraph(n, e);
}

// Largest component of the subgraph kept by `keepEdge`, by plain union-find
// over the edge list.
template <class EdgePred>
int largestComponentUnder(const Multigraph& g, EdgePred keepEdge) {
    std::map<VertexId, VertexId> parent;
    for (VertexId v : g.vertices()) parent[v] = v;
    auto find = [&](VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const EdgeRec& e : g.edges())
        if (!e.isLoop() && keepEdge(e)) parent[find(e.u)] = find(e.v);
    std::map<VertexId, int> size;
    int worst = 0;
    for (VertexId v : g.vertices()) worst = std::max(worst, ++size[find(v)]);
    return worst;
}

inline int worstMonoComponent(const Multigraph& g, const std::map<VertexId, int>& colors) {
    return largestComponentUnder(g, [&](const EdgeRec& e) { return colors.at(e.u) == colors.at(e.v); });
}

// First palette size whose full assignment space contains a coloring with
// every monochromatic component of at most maxComponent vertices. No pruning:
// every one of the k^n assignments is visited until one fits.
inline int naiveMinColors(const Multigraph& g, long long maxComponent) {
    int n = g.vertexCount();
    if (n == 0) return 1;
    for (int k = 1;; ++k) {
        std::vector<int> pick(static_cast<size_t>(n), 1);
        for (;;) {
            std::map<VertexId, int> colors;
            for (int i = 0; i < n; ++i) colors[g.vertices()[static_cast<size_t>(i)]] = pick[static_cast<size_t>(i)];
            if (worstMonoComponent(g, colors) <= maxComponent) return k;
            int i = n - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == k) pick[static_cast<size_t>(i--)] = 1;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
        }
    }
}

// Minimum crossing-edge count over all bipartitions with both sides nonempty,
// vertex 0 of the listing pinned to side A.
inline int bruteMinCutOrder(const Multigraph& g) {
    int n = g.vertexCount();
    std::map<VertexId, int> side;
    int best = g.edgeCount() + 1;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        for (int i = 0; i < n; ++i)
            side[g.vertices()[static_cast<size_t>(i)]] = i > 0 && ((mask >> (i - 1)) & 1u);
        int crossing = 0;
        for (const EdgeRec& e : g.edges()) crossing += side[e.u] != side[e.v];
        best = std::min(best, crossing);
    }
    return best;
}

inline Multigraph randomGraph(std::mt19937& rng, int n, int edgeAttempts, bool allowLoops = false,
                              bool allowParallel = true) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> seen;
    std::uniform_int_distribution<int> pickV(0, n - 1);
    for (int i = 0; i < edgeAttempts; ++i) {
        int u = pickV(rng), v = pickV(rng);
        if (u == v && !allowLoops) continue;
        auto key = std::minmax(u, v);
        if (!allowParallel && !seen.insert(key).second) continue;
        edges.push_back({u, v});
    }
    return Multigraph(n, edges);
}

}  // namespace testsupport
