#pragma once

#include <string>
#include <vector>

#include "floorplan/geometry_core.hpp"
#include "floorplan/grid.hpp"
#include "floorplan/skeleton.hpp"

namespace floorplan {

struct Room {
    Polygon polygon;
    std::string room_type;
    int room_id = 0;
};

struct FloorPlan {
    std::vector<Room> rooms;
    WallSet walls;
};

// Label values used when rasterizing; taken from the vocabulary's grid_labels.
struct GridLabels {
    int background = 0;
    int structure = 1;
    std::map<std::string, int> room_type_labels;
    std::map<int, std::string> palette() const;
};

namespace geometry {

// Corridor half-width around wall segments in normalized units
// (about one pixel at a 512-wide raster).
inline constexpr double kDefaultWallEps = 0.004;

// Smallest convex polygon containing the points, CCW, collinear boundary
// points dropped. Throws geometry_error for fewer than 3 distinct points or
// an all-collinear input.
Polygon convex_hull(const std::vector<Point>& points);

// Minimum-area enclosing rectangle at arbitrary orientation. An optimal
// rectangle shares a direction with some hull edge, so candidate frames are
// swept from hull edges (rotating-calipers family).
RotatedRect min_rotated_rect(const Polygon& poly);

// Connected pieces of poly after removing a corridor of half-width wall_eps
// around every wall segment, computed on a local raster with flood fill.
// Walls that do not touch poly leave a single piece equal to poly.
std::vector<Polygon> cut_by_walls(const Polygon& poly, const WallSet& walls, double wall_eps);

// Largest-area piece of cut_by_walls(rect, walls); ties broken by the
// lexicographically smallest centroid (x, then y).
Polygon refine_by_structure(const RotatedRect& rect, const WallSet& walls,
                            double wall_eps = kDefaultWallEps);

// Paints background, then rooms ordered by descending polygon area (stable
// by room_id) so smaller rooms overwrite larger ones, then the structure
// label along wall segments. Pixel membership is a center-point test.
Grid rasterize_floorplan(const FloorPlan& plan, int width, int height, const GridLabels& labels);

// Scanline fill of one polygon into the grid (even-odd rule at pixel centers).
void fill_polygon(Grid& grid, const Polygon& poly, std::uint8_t label);

// 1-pixel Bresenham stroke between two normalized endpoints.
void draw_segment(Grid& grid, const Segment& seg, std::uint8_t label);

}  // namespace geometry

namespace serial {

// Per-pixel point-in-polygon rasterizer with output identical to
// geometry::rasterize_floorplan; kept for tests and the kernel benchmark.
Grid rasterize_floorplan(const FloorPlan& plan, int width, int height, const GridLabels& labels);

}  // namespace serial

}  // namespace floorplan
