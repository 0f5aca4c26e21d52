#pragma once

#include <map>
#include <string>
#include <vector>

#include "cluscol/multigraph.hpp"

namespace cluscol {

// Vertex coloring with a declared palette [1..paletteSize]. Assignments may be
// partial while a coloring is being built; the verification and merge
// operations require totality on their graphs.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int paletteSize) : paletteSize_(paletteSize) {}
    Coloring(int paletteSize, std::map<VertexId, int> assignment);

    int paletteSize() const { return paletteSize_; }
    void setPaletteSize(int k);

    bool isAssigned(VertexId v) const { return assignment_.count(v) != 0; }
    int color(VertexId v) const;
    void assign(VertexId v, int c);

    const std::map<VertexId, int>& assignment() const { return assignment_; }
    int maxColorUsed() const;
    bool totalOn(const Multigraph& g) const;

private:
    int paletteSize_ = 0;
    std::map<VertexId, int> assignment_;
};

// Components of the color classes: maximal connected sets of equal-colored
// vertices. Unassigned vertices belong to no component. Parts ordered by
// minimum vertex id, ascending inside.
std::vector<std::vector<VertexId>> monochromatic_components(const Multigraph& g, const Coloring& c);

struct ClusteringReport {
    bool ok = false;
    int worstComponentSize = 0;
    std::vector<VertexId> witness;  // one offending component, empty when ok
    std::string problem;            // empty when ok
};

// Report-style check: c is total on g, stays within palette k, and every
// monochromatic component has at most maxComponent vertices.
ClusteringReport verify_clustering(const Multigraph& g, const Coloring& c, int k, long long maxComponent);

// Combines colorings of the two sides of an edge cut of order <= k-1 into a
// coloring of g with no monochromatic crossing edge, by permuting sideA's
// colors along a perfect matching in the bipartite complement of the
// color-conflict graph. The merged clustering never exceeds the larger side's.
Coloring merge_across_cut(const Multigraph& g, const EdgeCut& cut, const Coloring& cA, const Coloring& cB,
                          int k, long long maxComponent);

// gPrime is g minus a set Z of extra edges on the same vertex set, and c
// colors gPrime with clustering <= maxComponent. Returns the clustering bound
// (|Z|+1) * maxComponent that c satisfies on g, after checking it does.
long long rebound_after_extra_edges(const Multigraph& g, const Multigraph& gPrime, const Coloring& c,
                                    long long maxComponent);

}  // namespace cluscol
