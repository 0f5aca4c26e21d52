#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "cluscol/bigint.hpp"
#include "cluscol/coloring.hpp"
#include "cluscol/multigraph.hpp"
#include "cluscol/tree_cut.hpp"
#include "cluscol/tree_decomp.hpp"

namespace cluscol {

// Serialization is positional: the edge array index becomes the edge id and
// the color array index is the vertex id. Graphs whose ids are not dense
// come back renumbered, so round-trips are exact only for dense inputs
// (every CLI format is dense).

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

// The color array spans [0 .. context.maxVertexId()]; 0 marks a vertex
// without a color (and positions that are not vertices).
nlohmann::json coloring_to_json(const Coloring& c, const Multigraph& context);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json tcd_to_json(const TreeCutDecomposition& tcd);
TreeCutDecomposition tcd_from_json(const nlohmann::json& j);
nlohmann::json td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const nlohmann::json& j);

std::map<NodeId, int> kmap_from_json(const nlohmann::json& j);

nlohmann::json clustering_report_to_json(const ClusteringReport& rep);

// Number when it fits 64 bits, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& x);

// Undirected DOT text; parallel edges repeat the statement, loops appear as
// self-edges, isolated vertices get their own statements.
std::string dot_from_graph(const Multigraph& g);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cluscol
