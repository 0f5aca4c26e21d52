#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cluscol/greedy_lift.hpp"
#include "cluscol/json_io.hpp"
#include "cluscol/oracle.hpp"
#include "cluscol/tree_decomp.hpp"

using namespace cluscol;

namespace {

// Wall-clock stage timings go to stderr only, so stdout and output files stay
// byte-identical across reruns.
class StageTimer {
public:
    void start() { last_ = std::chrono::steady_clock::now(); }
    void mark(const std::string& stage) {
        auto now = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(now - last_).count();
        std::cerr << "# stage " << stage << " " << seconds << "s\n";
        last_ = now;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void emitJson(const nlohmann::json& j, const std::string& outPath) {
    std::string text = j.dump(2) + "\n";
    if (outPath.empty())
        std::cout << text;
    else
        write_text_file(outPath, text);
}

long long verifyCap(const BigInt& declared, const Multigraph& g) {
    BigInt n = g.vertexCount();
    BigInt cap = declared < n ? declared : n;
    if (cap < 1) cap = 1;
    return static_cast<long long>(cap);
}

nlohmann::json runReport(bool ok, const nlohmann::json& declaredBound, long long measuredWorst, int paletteUsed) {
    nlohmann::json j;
    j["ok"] = ok;
    j["declaredBound"] = declaredBound;
    j["measuredWorst"] = measuredWorst;
    j["paletteUsed"] = paletteUsed;
    return j;
}

struct LiftArgs {
    std::string graphPath, tcdPath, kmapPath, outPath;
    long long clustering = 1;
    long long xi = 1;
    int capVertices = 12;
};

int cmdLift(const LiftArgs& a) {
    StageTimer timer;
    timer.start();
    Multigraph g = graph_from_json(load_json_file(a.graphPath));
    TreeCutDecomposition tcd = tcd_from_json(load_json_file(a.tcdPath));
    std::map<NodeId, int> kmap = kmap_from_json(load_json_file(a.kmapPath));
    timer.mark("parse");

    LiftParameters params = derived_constants(a.clustering, a.xi);
    CanonicalProvider provider(a.clustering, a.capVertices);
    LiftStats stats;
    Coloring c = lift(g, tcd, kmap, provider, params, &stats);
    timer.mark("lift");

    long long maxBag = 1;
    for (const auto& [t, bag] : tcd.bags) maxBag = std::max(maxBag, static_cast<long long>(bag.size()));
    BigInt declared = lift_component_bound(params, maxBag);
    ClusteringReport rep = verify_clustering(g, c, c.paletteSize(), verifyCap(declared, g));
    timer.mark("verify");

    write_text_file(a.outPath, coloring_to_json(c, g).dump(2) + "\n");
    nlohmann::json report = runReport(rep.ok, bigint_to_json(declared), rep.worstComponentSize, c.paletteSize());
    report["nStar"] = bigint_to_json(params.nStar);
    std::cout << report.dump(2) << "\n";
    return rep.ok ? 0 : 1;
}

struct TdLiftArgs {
    std::string graphPath, tdPath, outPath, mode, dumpDir;
    int k = 0;
    long long clustering = 1;
    int d = 1;
    int eta = 1;
    int capVertices = 10;
};

int cmdTdLift(const TdLiftArgs& a) {
    StageTimer timer;
    timer.start();
    Multigraph g = graph_from_json(load_json_file(a.graphPath));
    TreeDecomposition td = td_from_json(load_json_file(a.tdPath));
    timer.mark("parse");

    auto colorer = [&](NodeId t, const Multigraph& piece) {
        auto found = find_clustered_coloring(piece, a.k, a.clustering, a.capVertices);
        if (!found)
            throw std::invalid_argument("td-lift: no " + std::to_string(a.k) + "-coloring with clustering " +
                                        std::to_string(a.clustering) + " exists for node " + std::to_string(t));
        return *found;
    };
    std::optional<PipelineResult> res;
    if (a.mode == "torso")
        res = lift_from_torso_colorings(g, td, a.k, colorer, a.d, a.eta, a.clustering);
    else
        res = lift_from_bag_colorings(g, td, a.k, colorer, a.d, a.eta, a.clustering);
    timer.mark("pipeline");

    if (!a.dumpDir.empty()) {
        std::filesystem::create_directories(a.dumpDir);
        std::filesystem::path dir(a.dumpDir);
        write_text_file((dir / "simplified.json").string(), td_to_json(res->conversion.simplified).dump(2) + "\n");
        write_text_file((dir / "tree-cut.json").string(), tcd_to_json(res->conversion.tcd).dump(2) + "\n");
    }
    write_text_file(a.outPath, coloring_to_json(res->coloring, g).dump(2) + "\n");
    timer.mark("write");

    nlohmann::json report =
        runReport(true, bigint_to_json(res->declaredBound), res->measuredWorst, res->paletteUsed);
    report["symbolicBound"] = bigint_to_json(res->symbolicBound);
    report["innerClustering"] = res->innerClustering;
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct MergeCutArgs {
    std::string graphPath, colorsAPath, colorsBPath, outPath;
    int k = 0;
    long long clustering = 1;
};

int cmdMergeCut(const MergeCutArgs& a) {
    StageTimer timer;
    timer.start();
    Multigraph g = graph_from_json(load_json_file(a.graphPath));
    Coloring cA = coloring_from_json(load_json_file(a.colorsAPath));
    Coloring cB = coloring_from_json(load_json_file(a.colorsBPath));
    timer.mark("parse");

    std::vector<VertexId> sideA;
    for (VertexId v : g.vertices())
        if (cA.isAssigned(v)) sideA.push_back(v);
    EdgeCut cut = make_edge_cut(g, sideA);
    Coloring merged = merge_across_cut(g, cut, cA, cB, a.k, a.clustering);
    ClusteringReport rep = verify_clustering(g, merged, a.k, a.clustering);
    timer.mark("merge");

    write_text_file(a.outPath, coloring_to_json(merged, g).dump(2) + "\n");
    nlohmann::json report = runReport(rep.ok, a.clustering, rep.worstComponentSize, merged.paletteSize());
    report["cutOrder"] = cut.order();
    std::cout << report.dump(2) << "\n";
    return rep.ok ? 0 : 1;
}

struct VerifyArgs {
    std::string graphPath, coloringPath;
    int k = 0;
    long long clustering = 1;
};

int cmdVerify(const VerifyArgs& a) {
    Multigraph g = graph_from_json(load_json_file(a.graphPath));
    Coloring c = coloring_from_json(load_json_file(a.coloringPath));
    ClusteringReport rep = verify_clustering(g, c, a.k, a.clustering);
    nlohmann::json report = runReport(rep.ok, a.clustering, rep.worstComponentSize, c.paletteSize());
    if (!rep.ok) {
        report["problem"] = rep.problem;
        report["witness"] = rep.witness;
    }
    std::cout << report.dump(2) << "\n";
    return rep.ok ? 0 : 1;
}

struct MinColorsArgs {
    std::string graphPath;
    long long clustering = 1;
    int jobs = 1;
    int capVertices = 10;
};

int cmdMinColors(const MinColorsArgs& a) {
    Multigraph g = graph_from_json(load_json_file(a.graphPath));
    int k = min_clustered_colors(g, a.clustering, a.capVertices, a.jobs);
    nlohmann::json j;
    j["minColors"] = k;
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct ImmersionArgs {
    std::string graphPath, patternPath;
    bool strong = false;
};

int cmdImmersion(const ImmersionArgs& a) {
    Multigraph g = graph_from_json(load_json_file(a.graphPath));
    Multigraph h = graph_from_json(load_json_file(a.patternPath));
    auto witness = has_immersion(g, h, a.strong);
    nlohmann::json j;
    j["found"] = witness.has_value();
    if (witness) {
        nlohmann::json vm = nlohmann::json::object();
        for (const auto& [hv, gv] : witness->vertexMap) vm[std::to_string(hv)] = gv;
        nlohmann::json pm = nlohmann::json::object();
        for (const auto& [he, path] : witness->pathMap) pm[std::to_string(he)] = path;
        j["vertexMap"] = vm;
        j["paths"] = pm;
        j["strong"] = witness->strong;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct GenArgs {
    std::string basePath, outPath;
    int eta = 1;
    long long clustering = 1;
    bool dot = false;
};

int cmdGen(const GenArgs& a, bool apex) {
    Multigraph base = graph_from_json(load_json_file(a.basePath));
    Multigraph out = apex ? gen_apex_blocker(base, a.eta) : gen_layered_blocker(base, a.clustering);
    if (a.dot) {
        std::string text = dot_from_graph(out);
        if (a.outPath.empty())
            std::cout << text;
        else
            write_text_file(a.outPath, text);
    } else {
        emitJson(graph_to_json(out), a.outPath);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustered coloring toolkit: decomposition lifts, cut merges, exact oracles, generators"};
    app.require_subcommand(1);

    LiftArgs liftArgs;
    CLI::App* lift = app.add_subcommand("lift", "color a graph through a tree-cut decomposition");
    lift->add_option("--graph", liftArgs.graphPath, "graph JSON")->required();
    lift->add_option("--tcd", liftArgs.tcdPath, "tree-cut decomposition JSON")->required();
    lift->add_option("--kmap", liftArgs.kmapPath, "per-node palette sizes JSON")->required();
    lift->add_option("--clustering", liftArgs.clustering, "torso clustering bound")->required()->check(CLI::PositiveNumber);
    lift->add_option("--xi", liftArgs.xi, "declared adhesion bound")->required()->check(CLI::PositiveNumber);
    lift->add_option("--cap-vertices", liftArgs.capVertices, "torso size cap for the built-in colorer")
        ->check(CLI::PositiveNumber);
    lift->add_option("--out", liftArgs.outPath, "output coloring JSON path")->required();

    TdLiftArgs tdArgs;
    CLI::App* tdLift = app.add_subcommand("td-lift", "color a bounded-degree graph through a tree decomposition");
    tdLift->add_option("--graph", tdArgs.graphPath, "graph JSON")->required();
    tdLift->add_option("--td", tdArgs.tdPath, "tree decomposition JSON")->required();
    tdLift->add_option("--mode", tdArgs.mode, "what the per-node colorer colors")
        ->required()
        ->check(CLI::IsMember({"torso", "bag"}));
    tdLift->add_option("-k,--colors", tdArgs.k, "per-node palette size")->required()->check(CLI::PositiveNumber);
    tdLift->add_option("--clustering", tdArgs.clustering, "per-node clustering bound")->required()->check(CLI::PositiveNumber);
    tdLift->add_option("-d,--degree", tdArgs.d, "max degree bound")->required()->check(CLI::PositiveNumber);
    tdLift->add_option("--eta", tdArgs.eta, "adhesion bound")->required()->check(CLI::PositiveNumber);
    tdLift->add_option("--cap-vertices", tdArgs.capVertices, "per-node search size cap")->check(CLI::PositiveNumber);
    tdLift->add_option("--dump-stages", tdArgs.dumpDir, "directory for intermediate decompositions");
    tdLift->add_option("--out", tdArgs.outPath, "output coloring JSON path")->required();

    MergeCutArgs mergeArgs;
    CLI::App* mergeCut = app.add_subcommand("merge-cut", "merge colorings of the two sides of an edge cut");
    mergeCut->add_option("--graph", mergeArgs.graphPath, "graph JSON")->required();
    mergeCut->add_option("--colors-a", mergeArgs.colorsAPath, "side-A coloring JSON (assigned vertices define side A)")
        ->required();
    mergeCut->add_option("--colors-b", mergeArgs.colorsBPath, "side-B coloring JSON")->required();
    mergeCut->add_option("-k,--colors", mergeArgs.k, "palette size")->required()->check(CLI::PositiveNumber);
    mergeCut->add_option("--clustering", mergeArgs.clustering, "clustering bound")->required()->check(CLI::PositiveNumber);
    mergeCut->add_option("--out", mergeArgs.outPath, "output coloring JSON path")->required();

    VerifyArgs verifyArgs;
    CLI::App* verify = app.add_subcommand("verify", "check a coloring against palette and clustering bounds");
    verify->add_option("--graph", verifyArgs.graphPath, "graph JSON")->required();
    verify->add_option("--coloring", verifyArgs.coloringPath, "coloring JSON")->required();
    verify->add_option("-k,--colors", verifyArgs.k, "palette size")->required()->check(CLI::PositiveNumber);
    verify->add_option("--clustering", verifyArgs.clustering, "clustering bound")->required()->check(CLI::PositiveNumber);

    CLI::App* oracle = app.add_subcommand("oracle", "exact brute-force answers at small scale");
    oracle->require_subcommand(1);
    MinColorsArgs minColorsArgs;
    CLI::App* minColors = oracle->add_subcommand("min-colors", "minimum palette for a clustering bound");
    minColors->add_option("--graph", minColorsArgs.graphPath, "graph JSON")->required();
    minColors->add_option("--clustering", minColorsArgs.clustering, "clustering bound")->required()->check(CLI::PositiveNumber);
    minColors->add_option("--jobs", minColorsArgs.jobs, "parallel search branches")->check(CLI::PositiveNumber);
    minColors->add_option("--cap-vertices", minColorsArgs.capVertices, "search size cap")->check(CLI::PositiveNumber);
    ImmersionArgs immersionArgs;
    CLI::App* immersion = oracle->add_subcommand("immersion", "does the graph immerse the pattern");
    immersion->add_option("--graph", immersionArgs.graphPath, "host graph JSON")->required();
    immersion->add_option("--pattern", immersionArgs.patternPath, "pattern graph JSON")->required();
    immersion->add_flag("--strong", immersionArgs.strong, "paths must avoid non-incident branch vertices");

    CLI::App* gen = app.add_subcommand("gen", "lower-bound construction generators");
    gen->require_subcommand(1);
    GenArgs apexArgs;
    CLI::App* apexBlocker = gen->add_subcommand("apex-blocker", "disjoint copies plus a dominating apex");
    apexBlocker->add_option("--base", apexArgs.basePath, "base graph JSON")->required();
    apexBlocker->add_option("--eta", apexArgs.eta, "number of copies")->required()->check(CLI::PositiveNumber);
    apexBlocker->add_flag("--dot", apexArgs.dot, "emit DOT instead of JSON");
    apexBlocker->add_option("--out", apexArgs.outPath, "output path (stdout when absent)");
    GenArgs layeredArgs;
    CLI::App* layeredBlocker = gen->add_subcommand("layered-blocker", "path with dense copy layers per edge");
    layeredBlocker->add_option("--base", layeredArgs.basePath, "base graph JSON")->required();
    layeredBlocker->add_option("--clustering", layeredArgs.clustering, "target clustering parameter")
        ->required()
        ->check(CLI::PositiveNumber);
    layeredBlocker->add_flag("--dot", layeredArgs.dot, "emit DOT instead of JSON");
    layeredBlocker->add_option("--out", layeredArgs.outPath, "output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (lift->parsed()) return cmdLift(liftArgs);
        if (tdLift->parsed()) return cmdTdLift(tdArgs);
        if (mergeCut->parsed()) return cmdMergeCut(mergeArgs);
        if (verify->parsed()) return cmdVerify(verifyArgs);
        if (minColors->parsed()) return cmdMinColors(minColorsArgs);
        if (immersion->parsed()) return cmdImmersion(immersionArgs);
        if (apexBlocker->parsed()) return cmdGen(apexArgs, true);
        if (layeredBlocker->parsed()) return cmdGen(layeredArgs, false);
    } catch (const ClaimViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
