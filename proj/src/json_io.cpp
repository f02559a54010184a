#include "floorplan/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace floorplan::io {

using nlohmann::json;

namespace {

json read_json(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw format_error(std::string("cannot open ") + what + " file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw format_error(std::string(what) + " JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_json(const json& j, const std::string& path, const char* what) {
    std::ofstream out(path);
    if (!out) throw format_error(std::string("cannot write ") + what + " file: " + path);
    out << j.dump(2) << "\n";
}

json wallset_to_json(const WallSet& walls) {
    json j;
    j["source_size"] = {walls.source_width, walls.source_height};
    j["segments"] = json::array();
    for (const Segment& s : walls.segments)
        j["segments"].push_back({{s.p0.x, s.p0.y}, {s.p1.x, s.p1.y}});
    return j;
}

WallSet wallset_from_json(const json& j) {
    WallSet walls;
    walls.source_width = j.at("source_size").at(0).get<int>();
    walls.source_height = j.at("source_size").at(1).get<int>();
    for (const auto& js : j.at("segments")) {
        const Point p0(js.at(0).at(0).get<double>(), js.at(0).at(1).get<double>());
        const Point p1(js.at(1).at(0).get<double>(), js.at(1).at(1).get<double>());
        walls.segments.emplace_back(p0, p1);
    }
    return walls;
}

}  // namespace

void save_wallset(const WallSet& walls, const std::string& path) {
    write_json(wallset_to_json(walls), path, "wall set");
}

WallSet load_wallset(const std::string& path) {
    const json j = read_json(path, "wall set");
    try {
        return wallset_from_json(j);
    } catch (const json::exception& e) {
        throw format_error("wall set schema violation in " + path + ": " + e.what());
    }
}

void save_floorplan(const FloorPlan& plan, const std::string& path) {
    json j;
    j["rooms"] = json::array();
    for (const Room& room : plan.rooms) {
        json jr;
        jr["id"] = room.room_id;
        jr["room_type"] = room.room_type;
        jr["polygon"] = json::array();
        for (const Point& p : room.polygon.ring) jr["polygon"].push_back({p.x, p.y});
        j["rooms"].push_back(std::move(jr));
    }
    j["walls"] = wallset_to_json(plan.walls);
    write_json(j, path, "floor plan");
}

FloorPlan load_floorplan(const std::string& path) {
    const json j = read_json(path, "floor plan");
    FloorPlan plan;
    try {
        for (const auto& jr : j.at("rooms")) {
            Room room;
            room.room_id = jr.at("id").get<int>();
            room.room_type = jr.at("room_type").get<std::string>();
            for (const auto& pt : jr.at("polygon"))
                room.polygon.ring.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
            plan.rooms.push_back(std::move(room));
        }
        if (j.contains("walls")) plan.walls = wallset_from_json(j.at("walls"));
    } catch (const json::exception& e) {
        throw format_error("floor plan schema violation in " + path + ": " + e.what());
    }
    return plan;
}

}  // namespace floorplan::io
