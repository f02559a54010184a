#pragma once

#include <utility>
#include <vector>

#include "floorplan/geometry_core.hpp"
#include "floorplan/grid.hpp"

namespace floorplan {

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord& o) const { return x == o.x && y == o.y; }
};

// Skeleton graph of a thinned mask. Nodes are endpoint (degree 1), junction
// (degree >= 3) and isolated pixels; each edge stores its full pixel path,
// starting at node_a's pixel and ending at node_b's.
struct SkeletonGraph {
    std::vector<PixelCoord> nodes;
    struct Edge {
        int node_a = 0;
        int node_b = 0;
        std::vector<PixelCoord> pixel_path;
    };
    std::vector<Edge> edges;
};

// Straight wall segments in normalized [-1,1]^2 coordinates.
struct WallSet {
    std::vector<Segment> segments;
    int source_width = 0;
    int source_height = 0;
};

namespace skeleton {

// Traces a thinned mask into nodes and pixel paths. Degree-2 cycles without
// any natural node get their lexicographically smallest pixel promoted to a
// node carrying a self-edge around the loop.
SkeletonGraph extract_graph(const BinaryMask& mask);

// Recursive max-deviation subdivision of a pixel path into chords whose
// sub-paths deviate by at most tolerance (perpendicular distance).
std::vector<Segment> split_straight(const std::vector<PixelCoord>& path, double tolerance);

// Keeps segments with Euclidean length >= min_length, order preserved.
std::vector<Segment> filter_short(const std::vector<Segment>& segments, double min_length);

// thin -> extract_graph -> split_straight per edge -> filter_short ->
// normalize into [-1,1]^2 (isotropic, center-anchored: the longest image
// side spans the full range).
WallSet vectorize_walls(const BinaryMask& mask, double tolerance, double min_length);

// Pixel (x, y) -> normalized coordinates for a w x h source raster.
Point normalize_pixel(double x, double y, int w, int h);
// Inverse of normalize_pixel.
Point denormalize_point(const Point& p, int w, int h);

}  // namespace skeleton

}  // namespace floorplan
