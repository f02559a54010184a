#include "floorplan/access_graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

namespace floorplan {

const char* to_string(ConnectionType t) {
    switch (t) {
        case ConnectionType::Door: return "door";
        case ConnectionType::Entrance: return "entrance";
        case ConnectionType::Passage: return "passage";
    }
    return "door";
}

ConnectionType connection_type_from_string(const std::string& s) {
    if (s == "door") return ConnectionType::Door;
    if (s == "entrance") return ConnectionType::Entrance;
    if (s == "passage") return ConnectionType::Passage;
    throw validation_error("unknown connection type: " + s);
}

int AccessGraph::node_index(int id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return static_cast<int>(i);
    return -1;
}

int LabelVocabulary::zoning_index(const std::string& name) const {
    for (std::size_t i = 0; i < zoning_types.size(); ++i)
        if (zoning_types[i] == name) return static_cast<int>(i);
    return -1;
}

int LabelVocabulary::room_type_index(const std::string& name) const {
    for (std::size_t i = 0; i < room_types.size(); ++i)
        if (room_types[i] == name) return static_cast<int>(i);
    return -1;
}

namespace graph {

using nlohmann::json;

void validate(const AccessGraph& g, const LabelVocabulary& vocab) {
    std::set<int> ids;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        if (!ids.insert(n.id).second)
            throw validation_error("duplicate node id " + std::to_string(n.id) + " at node index " +
                                   std::to_string(i));
        if (vocab.zoning_index(n.zoning) < 0)
            throw validation_error("unknown zoning type '" + n.zoning + "' at node index " +
                                   std::to_string(i));
        if (n.room_type && vocab.room_type_index(*n.room_type) < 0)
            throw validation_error("unknown room type '" + *n.room_type + "' at node index " +
                                   std::to_string(i));
    }
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (!ids.count(e.a) || !ids.count(e.b))
            throw validation_error("edge at index " + std::to_string(i) +
                                   " references a missing node");
        if (e.a == e.b)
            throw validation_error("self-loop at edge index " + std::to_string(i));
        const auto key = std::minmax(e.a, e.b);
        if (!pairs.insert(key).second)
            throw validation_error("duplicate edge at edge index " + std::to_string(i));
    }
}

namespace {

Polygon polygon_from_json(const json& j) {
    Polygon p;
    for (const auto& pt : j) p.ring.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
    return p;
}

json polygon_to_json(const Polygon& p) {
    json j = json::array();
    for (const Point& pt : p.ring) j.push_back({pt.x, pt.y});
    return j;
}

}  // namespace

AccessGraph load_access_graph(const std::string& path, const LabelVocabulary& vocab) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open access graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error("access graph JSON parse error in " + path + ": " + e.what());
    }

    AccessGraph g;
    try {
        for (const auto& jn : j.at("nodes")) {
            AccessGraph::Node n;
            n.id = jn.at("id").get<int>();
            n.zoning = jn.at("zoning").get<std::string>();
            if (jn.contains("room_type") && !jn["room_type"].is_null())
                n.room_type = jn["room_type"].get<std::string>();
            if (jn.contains("polygon") && !jn["polygon"].is_null())
                n.polygon = polygon_from_json(jn["polygon"]);
            g.nodes.push_back(std::move(n));
        }
        for (const auto& je : j.at("edges")) {
            AccessGraph::Edge e;
            e.a = je.at("a").get<int>();
            e.b = je.at("b").get<int>();
            e.type = connection_type_from_string(je.at("type").get<std::string>());
            g.edges.push_back(e);
        }
    } catch (const json::exception& e) {
        throw validation_error("access graph schema violation in " + path + ": " + e.what());
    }
    validate(g, vocab);
    return g;
}

void save_access_graph(const AccessGraph& g, const std::string& path) {
    json j;
    j["nodes"] = json::array();
    for (const auto& n : g.nodes) {
        json jn;
        jn["id"] = n.id;
        jn["zoning"] = n.zoning;
        jn["room_type"] = n.room_type ? json(*n.room_type) : json(nullptr);
        jn["polygon"] = n.polygon ? polygon_to_json(*n.polygon) : json(nullptr);
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"type", to_string(e.type)}});
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write access graph file: " + path);
    out << j.dump(2) << "\n";
}

LabelVocabulary load_vocabulary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open vocabulary file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error("vocabulary JSON parse error in " + path + ": " + e.what());
    }
    LabelVocabulary v;
    try {
        v.zoning_types = j.at("zoning_types").get<std::vector<std::string>>();
        v.room_types = j.at("room_types").get<std::vector<std::string>>();
        for (const auto& [name, label] : j.at("grid_labels").items())
            v.grid_labels[name] = label.get<int>();
    } catch (const json::exception& e) {
        throw validation_error("vocabulary schema violation in " + path + ": " + e.what());
    }
    if (!v.grid_labels.count("background") || !v.grid_labels.count("structure"))
        throw validation_error("vocabulary grid_labels must define background and structure");
    std::set<std::string> seen(v.zoning_types.begin(), v.zoning_types.end());
    if (seen.size() != v.zoning_types.size())
        throw validation_error("duplicate zoning type in vocabulary");
    seen = std::set<std::string>(v.room_types.begin(), v.room_types.end());
    if (seen.size() != v.room_types.size())
        throw validation_error("duplicate room type in vocabulary");
    return v;
}

std::pair<Matrix, Matrix> one_hot_features(const AccessGraph& g, const LabelVocabulary& vocab) {
    Matrix node_features(static_cast<int>(g.nodes.size()),
                         static_cast<int>(vocab.zoning_types.size()));
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const int z = vocab.zoning_index(g.nodes[i].zoning);
        if (z < 0) throw validation_error("unknown zoning type: " + g.nodes[i].zoning);
        node_features.at(static_cast<int>(i), z) = 1.0;
    }
    Matrix edge_features(static_cast<int>(g.edges.size()), 3);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        edge_features.at(static_cast<int>(i), static_cast<int>(g.edges[i].type)) = 1.0;
    return {std::move(node_features), std::move(edge_features)};
}

}  // namespace graph

}  // namespace floorplan
