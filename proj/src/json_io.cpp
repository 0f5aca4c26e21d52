#include "cluscol/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cluscol {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("json: " + msg); }

int asInt(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where + " must be an integer");
    return j.get<int>();
}

const nlohmann::json& field(const nlohmann::json& j, const std::string& name) {
    if (!j.is_object()) fail("expected an object with a \"" + name + "\" field");
    auto it = j.find(name);
    if (it == j.end()) fail("missing field \"" + name + "\"");
    return *it;
}

std::vector<std::pair<int, int>> intPairs(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) fail(where + " must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2) fail(where + " entries must be pairs");
        out.emplace_back(asInt(entry[0], where), asInt(entry[1], where));
    }
    return out;
}

NodeId nodeKey(const std::string& key) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(key, &pos);
    } catch (const std::exception&) {
        fail("bag key \"" + key + "\" is not a node id");
    }
    if (pos != key.size() || value < 0) fail("bag key \"" + key + "\" is not a node id");
    return value;
}

nlohmann::json decompositionToJson(const Multigraph& tree, const std::map<NodeId, std::vector<VertexId>>& bags) {
    nlohmann::json j;
    j["treeEdges"] = nlohmann::json::array();
    for (const EdgeRec& e : tree.edges()) j["treeEdges"].push_back({e.u, e.v});
    j["bags"] = nlohmann::json::object();
    for (const auto& [t, bag] : bags) {
        std::vector<VertexId> sorted = bag;
        std::sort(sorted.begin(), sorted.end());
        j["bags"][std::to_string(t)] = sorted;
    }
    return j;
}

std::pair<Multigraph, std::map<NodeId, std::vector<VertexId>>> decompositionFromJson(const nlohmann::json& j) {
    std::map<NodeId, std::vector<VertexId>> bags;
    const nlohmann::json& jb = field(j, "bags");
    if (!jb.is_object()) fail("\"bags\" must be an object");
    std::vector<NodeId> nodes;
    for (const auto& [key, value] : jb.items()) {
        NodeId t = nodeKey(key);
        if (!value.is_array()) fail("bag of node " + key + " must be an array");
        std::vector<VertexId> bag;
        for (const auto& entry : value) bag.push_back(asInt(entry, "bag of node " + key));
        bags[t] = std::move(bag);
        nodes.push_back(t);
    }
    std::vector<EdgeRec> treeEdges;
    int id = 0;
    for (const auto& [a, b] : intPairs(field(j, "treeEdges"), "\"treeEdges\"")) {
        treeEdges.push_back(EdgeRec{id++, a, b});
    }
    return {Multigraph(std::move(nodes), std::move(treeEdges)), std::move(bags)};
}

}  // namespace

nlohmann::json graph_to_json(const Multigraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::json::array();
    for (const EdgeRec& e : g.edges()) j["edges"].push_back({e.u, e.v});
    return j;
}

Multigraph graph_from_json(const nlohmann::json& j) {
    const nlohmann::json& jv = field(j, "vertices");
    if (!jv.is_array()) fail("\"vertices\" must be an array");
    std::vector<VertexId> vertices;
    for (const auto& entry : jv) vertices.push_back(asInt(entry, "\"vertices\""));
    std::vector<EdgeRec> edges;
    int id = 0;
    for (const auto& [u, v] : intPairs(field(j, "edges"), "\"edges\"")) edges.push_back(EdgeRec{id++, u, v});
    return Multigraph(std::move(vertices), std::move(edges));
}

nlohmann::json coloring_to_json(const Coloring& c, const Multigraph& context) {
    std::vector<int> colors(static_cast<size_t>(context.maxVertexId() + 1), 0);
    for (VertexId v : context.vertices())
        if (c.isAssigned(v)) colors[static_cast<size_t>(v)] = c.color(v);
    nlohmann::json j;
    j["k"] = c.paletteSize();
    j["colors"] = colors;
    return j;
}

Coloring coloring_from_json(const nlohmann::json& j) {
    int k = asInt(field(j, "k"), "\"k\"");
    if (k < 0) fail("\"k\" must be nonnegative");
    const nlohmann::json& jc = field(j, "colors");
    if (!jc.is_array()) fail("\"colors\" must be an array");
    Coloring c(k);
    VertexId v = 0;
    for (const auto& entry : jc) {
        int col = asInt(entry, "\"colors\"");
        if (col < 0 || col > k) fail("color " + std::to_string(col) + " outside [0.." + std::to_string(k) + "]");
        if (col > 0) c.assign(v, col);
        ++v;
    }
    return c;
}

nlohmann::json tcd_to_json(const TreeCutDecomposition& tcd) { return decompositionToJson(tcd.tree, tcd.bags); }

TreeCutDecomposition tcd_from_json(const nlohmann::json& j) {
    auto [tree, bags] = decompositionFromJson(j);
    return TreeCutDecomposition{std::move(tree), std::move(bags)};
}

nlohmann::json td_to_json(const TreeDecomposition& td) { return decompositionToJson(td.tree, td.bags); }

TreeDecomposition td_from_json(const nlohmann::json& j) {
    auto [tree, bags] = decompositionFromJson(j);
    return TreeDecomposition{std::move(tree), std::move(bags)};
}

std::map<NodeId, int> kmap_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail("palette map must be an object");
    std::map<NodeId, int> kmap;
    for (const auto& [key, value] : j.items()) kmap[nodeKey(key)] = asInt(value, "palette of node " + key);
    return kmap;
}

nlohmann::json clustering_report_to_json(const ClusteringReport& rep) {
    nlohmann::json j;
    j["ok"] = rep.ok;
    j["worst"] = rep.worstComponentSize;
    j["witness"] = rep.witness;
    if (!rep.problem.empty()) j["problem"] = rep.problem;
    return j;
}

nlohmann::json bigint_to_json(const BigInt& x) {
    if (fitsInt64(x)) return static_cast<long long>(x);
    return x.str();
}

std::string dot_from_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v : g.vertices()) out << "  " << v << ";\n";
    for (const EdgeRec& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open " + path + " for writing");
    out << text;
    if (!out) fail("write to " + path + " failed");
}

}  // namespace cluscol
