#pragma once

#include <string>

#include "floorplan/geometry.hpp"
#include "floorplan/skeleton.hpp"

namespace floorplan::io {

// {"source_size":[w,h],"segments":[[[x0,y0],[x1,y1]],...]}, coords in [-1,1].
void save_wallset(const WallSet& walls, const std::string& path);
WallSet load_wallset(const std::string& path);

// {"rooms":[{"id":0,"room_type":"Bedroom","polygon":[[x,y],...]},...],
//  "walls":<WallSet>}
void save_floorplan(const FloorPlan& plan, const std::string& path);
FloorPlan load_floorplan(const std::string& path);

}  // namespace floorplan::io
