#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorplan/geometry_core.hpp"
#include "floorplan/matrix.hpp"

namespace floorplan {

enum class ConnectionType { Door, Entrance, Passage };

const char* to_string(ConnectionType t);
ConnectionType connection_type_from_string(const std::string& s);

// Rooms as nodes, connections as undirected typed edges. Stored once per
// unordered pair; message passing expands both directions internally.
struct AccessGraph {
    struct Node {
        int id = 0;
        std::string zoning;
        std::optional<std::string> room_type;
        std::optional<Polygon> polygon;
    };
    struct Edge {
        int a = 0;
        int b = 0;
        ConnectionType type = ConnectionType::Door;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    int node_index(int id) const;  // -1 when absent
};

struct LabelVocabulary {
    std::vector<std::string> zoning_types;
    std::vector<std::string> room_types;
    std::map<std::string, int> grid_labels;  // background, structure, one per room type

    int zoning_index(const std::string& name) const;  // -1 when unknown
    int room_type_index(const std::string& name) const;
};

class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace graph {

// Checks the AccessGraph invariants against a vocabulary: unique node ids,
// edges referencing existing nodes, no self-loops, each unordered pair at
// most once, labels drawn from the vocabulary.
void validate(const AccessGraph& g, const LabelVocabulary& vocab);

AccessGraph load_access_graph(const std::string& path, const LabelVocabulary& vocab);
void save_access_graph(const AccessGraph& g, const std::string& path);

LabelVocabulary load_vocabulary(const std::string& path);

// One-hot zoning per node (|V| x |Z|) and one-hot connection type per edge
// (|E| x 3), rows in node/edge list order.
std::pair<Matrix, Matrix> one_hot_features(const AccessGraph& g, const LabelVocabulary& vocab);

}  // namespace graph

}  // namespace floorplan
