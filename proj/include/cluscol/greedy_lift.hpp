#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluscol/bigint.hpp"
#include "cluscol/coloring.hpp"
#include "cluscol/multigraph.hpp"
#include "cluscol/tree_cut.hpp"

namespace cluscol {

// Thrown when one of the instrumented per-step bounds of the greedy lift
// fails. These checks are always on; a throw means the implementation (or a
// caller-supplied colorer) broke an invariant the output bound depends on.
struct ClaimViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Clustering N of the torso colorings, adhesion bound xi, and the derived
// constants of the lift. The composed bounds outgrow 64-bit integers quickly
// (f is superexponential in xi), so they are exact big integers.
struct LiftParameters {
    long long clusteringN = 0;
    long long xi = 0;
    BigInt n0;                // xi^2 + xi
    BigInt n1;                // 2 * n0 * xi
    BigInt n2;                // (1 + 2 xi^2 (xi+1) N) n1^2 + n0
    std::vector<BigInt> f;    // f[x] for x in [1..xi], f[0] unused
    BigInt nStar;             // 1 + (1 + N xi)(xi+1) n0 f(xi)
};

LiftParameters derived_constants(long long clusteringN, long long xi);

// Supplies the per-node torso colorings the lift composes. Contract: color
// torsoMinusBag totally with colors from [1..paletteSize] minus {forbidden}
// (forbidden == 0 forbids nothing) and clustering <= N. Every call is
// verified by the lift; violations throw.
class TorsoColoringProvider {
public:
    virtual ~TorsoColoringProvider() = default;
    virtual Coloring color(NodeId node, const Multigraph& torsoMinusBag, int paletteSize, int forbidden) = 0;
};

// Reference provider: exhaustive smallest-palette search on each torso,
// result remapped order-preservingly into the allowed colors.
class CanonicalProvider : public TorsoColoringProvider {
public:
    explicit CanonicalProvider(long long clusteringN, int capVertices = 12)
        : clusteringN_(clusteringN), capVertices_(capVertices) {}
    Coloring color(NodeId node, const Multigraph& torsoMinusBag, int paletteSize, int forbidden) override;

private:
    long long clusteringN_;
    int capVertices_;
};

struct LiftStats {
    long long steps = 0;
    long long windowChecks = 0;
    long long growthChecks = 0;
    long long subtreeChecks = 0;
};

// Greedy DFS lift for unit-bag tree-cut decompositions: composes the
// per-node torso colorings into a max{k_t + |X_t|}-coloring of g with
// clustering <= nStar. Requires every bag to have at most one vertex,
// adhesion <= params.xi, and k_t >= 1 with k_t + |X_t| >= 2 for every node.
Coloring lift_unit_bags(const Multigraph& g, const TreeCutDecomposition& tcd,
                        const std::map<NodeId, int>& kMap, TorsoColoringProvider& provider,
                        const LiftParameters& params, LiftStats* stats = nullptr);

// General-bag wrapper: contracts each bag to one vertex, lifts, and pulls the
// coloring back. Palette max{k_t + min(|X_t|, 1)}, clustering <= maxBag * nStar.
Coloring lift(const Multigraph& g, const TreeCutDecomposition& tcd, const std::map<NodeId, int>& kMap,
              TorsoColoringProvider& provider, const LiftParameters& params, LiftStats* stats = nullptr);

// The clustering bound lift() certifies: maxBag * nStar.
BigInt lift_component_bound(const LiftParameters& params, long long maxBag);

// Externally produced structural data: a tree-cut decomposition of adhesion
// <= eta together with, per node, an edge set Z_t (|Z_t| <= xi) and a degree
// threshold d_t <= d, such that few vertices of the torso minus Z_t reach
// degree d_t and those that do are non-peripheral. hPrime is the graph whose
// degree-d_t vertex counts bound condition (i).
struct CertNodeData {
    std::vector<EdgeId> z;  // edge ids of g
    int dt = 0;
};

struct StructureCertificate {
    TreeCutDecomposition tcd;
    Multigraph hPrime;
    int d = 0;
    int xi = 0;
    int eta = 0;
    std::map<NodeId, CertNodeData> perNode;
};

struct CertReport {
    bool ok = false;
    std::vector<std::string> problems;
};

// Recomputes every condition from scratch:
//   (0) decomposition valid, adhesion <= eta, |Z_t| <= xi, 0 <= d_t <= d;
//   (i) fewer degree->=d_t vertices in G_t - Z_t than in hPrime;
//  (ii) every degree->=d_t vertex of G_t - Z_t is a bag vertex;
// (iii) single node or non-leaf: every bag vertex has degree >= d_t in G_t - Z_t;
//  (iv) leaf of a tree with >= 2 nodes: bag size <= 1.
CertReport validate_certificate(const Multigraph& g, const StructureCertificate& cert);

// Colors a bounded-degree graph with the given palette; clustering <= nBase
// is part of the contract and is verified per call.
using BaseColorer = std::function<Coloring(const Multigraph&, int paletteSize)>;

// Assembles a (chi+1)-coloring of g from a validated certificate: per-node
// palettes from the d_t threshold and leaf shape, Z_t edges handled by
// deleting them before base-coloring and widening the clustering to
// (|Z_t|+1) * nBase, then the bag-contraction lift with adhesion eta.
Coloring color_from_certificate(const Multigraph& g, const StructureCertificate& cert,
                                const BaseColorer& baseColorer, int chi, long long nBase,
                                BigInt* declaredBound = nullptr, LiftStats* stats = nullptr);

// Colors a graph with no edge-cut of order < 4; clustering <= N verified.
using CertifiedColorer = std::function<Coloring(const Multigraph&)>;

// Recursively splits g along minimum edge-cuts of order <= 3, colors the
// pieces (4-edge-connected ones via certifiedColorer), and merges across each
// cut. Needs k >= 4 so cut order <= 3 <= k-1 at every merge. The final
// clustering never exceeds N: every monochromatic component lies inside one
// recursion leaf. `leaves`, when given, collects the leaf vertex sets.
Coloring color_via_small_cuts(const Multigraph& g, const CertifiedColorer& certifiedColorer, int k,
                              long long maxComponent,
                              std::vector<std::vector<VertexId>>* leaves = nullptr);

}  // namespace cluscol
