#include <algorithm>

#include "floorplan/geometry_core.hpp"
#include "floorplan/grid.hpp"

namespace floorplan {

void validate_grid(const Grid& grid) {
    if (grid.width < 0 || grid.height < 0 ||
        grid.cells.size() != static_cast<std::size_t>(grid.width) * grid.height)
        throw std::runtime_error("grid cell storage does not match dimensions");
    for (std::uint8_t c : grid.cells)
        if (!grid.palette.count(c))
            throw std::runtime_error("grid cell label " + std::to_string(int(c)) +
                                     " missing from palette");
}

namespace {

// Proper intersection test for open segments plus collinear-overlap check.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    auto on = [](const Point& p, const Point& q, const Point& r) {
        return cross(p, q, r) == 0.0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    // Collinear overlap with interior contact counts as a crossing.
    if (d1 == 0.0 && on(c, d, a) && !(a == c) && !(a == d)) return true;
    if (d2 == 0.0 && on(c, d, b) && !(b == c) && !(b == d)) return true;
    if (d3 == 0.0 && on(a, b, c) && !(c == a) && !(c == b)) return true;
    if (d4 == 0.0 && on(a, b, d) && !(d == a) && !(d == b)) return true;
    return false;
}

}  // namespace

bool is_simple(const Polygon& poly) {
    const auto& r = poly.ring;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_cross(r[i], r[(i + 1) % n], r[j], r[(j + 1) % n])) return false;
        }
    }
    return true;
}

void validate_polygon(const Polygon& poly) {
    const auto& r = poly.ring;
    if (r.size() < 3) throw geometry_error("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == r[(i + 1) % r.size()])
            throw geometry_error("polygon has two equal consecutive vertices");
    if (signed_area(poly) <= 0.0) throw geometry_error("polygon must be CCW with positive area");
    if (!is_simple(poly)) throw geometry_error("polygon is self-intersecting");
}

double RotatedRect::area() const {
    return distance(corners[0], corners[1]) * distance(corners[1], corners[2]);
}

}  // namespace floorplan
