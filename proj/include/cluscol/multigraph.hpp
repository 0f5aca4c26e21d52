#pragma once

#include <map>
#include <string>
#include <vector>

namespace cluscol {

using VertexId = int;
using EdgeId = int;
using NodeId = int;  // vertices of decomposition trees

struct EdgeRec {
    EdgeId id{};
    VertexId u{};
    VertexId v{};

    bool isLoop() const { return u == v; }
    VertexId otherEnd(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
};

// Finite multigraph with loops and parallel edges. Vertex and edge ids are
// nonnegative integers; ids survive subgraph extraction unchanged, so an
// extracted edge still names the same edge of the host graph. Every accessor
// iterates in ascending id order, which keeps all downstream algorithms
// deterministic.
class Multigraph {
public:
    Multigraph() = default;

    // Dense construction: vertices 0..vertexCount-1, edge ids 0..edges.size()-1.
    Multigraph(int vertexCount, const std::vector<std::pair<VertexId, VertexId>>& edgeList);

    // Explicit construction with caller-chosen ids. Ids must be nonnegative and
    // unique; edge endpoints must be declared vertices.
    Multigraph(std::vector<VertexId> vertices, std::vector<EdgeRec> edges);

    int vertexCount() const { return static_cast<int>(vertices_.size()); }
    int edgeCount() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return vertices_.empty(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    bool hasVertex(VertexId v) const { return vidx_.count(v) != 0; }
    bool hasEdge(EdgeId e) const { return eidx_.count(e) != 0; }
    const EdgeRec& edge(EdgeId e) const;

    // Loops count twice.
    int degree(VertexId v) const;
    int maxDegree() const;

    // Edge ids incident to v, ascending; a loop appears once in the list.
    const std::vector<EdgeId>& incidentEdges(VertexId v) const;

    // Distinct neighbors, ascending, self excluded even when loops exist.
    std::vector<VertexId> neighbors(VertexId v) const;

    // Connected components; parts ordered by minimum vertex id, vertices
    // ascending inside each part.
    std::vector<std::vector<VertexId>> components() const;

    // Subgraph induced by `keep` (unknown ids rejected). Edge ids preserved.
    Multigraph inducedSubgraph(const std::vector<VertexId>& keep) const;

    // Copy without the listed edges. Unknown ids rejected.
    Multigraph withoutEdges(const std::vector<EdgeId>& del) const;

    VertexId maxVertexId() const { return vertices_.empty() ? -1 : vertices_.back(); }
    EdgeId maxEdgeId() const { return edges_.empty() ? -1 : edges_.back().id; }

private:
    void buildIndex();

    std::vector<VertexId> vertices_;  // ascending
    std::vector<EdgeRec> edges_;      // ascending id
    std::map<VertexId, int> vidx_;    // vertex id -> position in vertices_
    std::map<EdgeId, int> eidx_;      // edge id -> position in edges_
    std::vector<std::vector<EdgeId>> incident_;  // parallel to vertices_
    std::vector<int> degree_;                    // parallel to vertices_
};

// Bipartition of V(g) together with the edges crossing it.
struct EdgeCut {
    std::vector<VertexId> sideA;     // ascending
    std::vector<VertexId> sideB;     // ascending
    std::vector<EdgeId> crossing;    // ascending
    int order() const { return static_cast<int>(crossing.size()); }
};

// Builds the cut determined by sideA; sideB is the complement.
EdgeCut make_edge_cut(const Multigraph& g, const std::vector<VertexId>& sideA);

// Exact global minimum edge cut. Both sides are nonempty; a disconnected graph
// yields an order-0 cut. Ties are broken toward the lexicographically smallest
// sideA vertex sequence. Requires at least two vertices.
EdgeCut min_edge_cut(const Multigraph& g);

}  // namespace cluscol
