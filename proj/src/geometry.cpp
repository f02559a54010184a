#include "floorplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

namespace floorplan {

std::map<int, std::string> GridLabels::palette() const {
    std::map<int, std::string> p;
    p[background] = "background";
    p[structure] = "structure";
    for (const auto& [name, label] : room_type_labels) p[label] = name;
    return p;
}

namespace geometry {

Polygon convex_hull(const std::vector<Point>& points) {
    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw geometry_error("convex hull needs at least 3 distinct points");

    const std::size_t n = pts.size();
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw geometry_error("convex hull degenerate: all points collinear");
    return Polygon(std::move(hull));
}

RotatedRect min_rotated_rect(const Polygon& poly) {
    if (poly.ring.size() < 3) throw geometry_error("minimum rotated rectangle needs a polygon");
    const Polygon hull = convex_hull(poly.ring);
    const auto& h = hull.ring;
    const std::size_t n = h.size();

    double best_area = std::numeric_limits<double>::infinity();
    double bu0 = 0, bu1 = 0, bv0 = 0, bv1 = 0;
    Point bdir;
    for (std::size_t e = 0; e < n; ++e) {
        const Point edge = h[(e + 1) % n] - h[e];
        const double len = length(edge);
        if (len <= 0.0) continue;
        const Point dir{edge.x / len, edge.y / len};
        const Point perp{-dir.y, dir.x};
        double u0 = std::numeric_limits<double>::infinity(), u1 = -u0;
        double v0 = u0, v1 = -u0;
        for (const Point& p : h) {
            const double u = dot(p, dir);
            const double v = dot(p, perp);
            u0 = std::min(u0, u);
            u1 = std::max(u1, u);
            v0 = std::min(v0, v);
            v1 = std::max(v1, v);
        }
        const double a = (u1 - u0) * (v1 - v0);
        if (a < best_area) {
            best_area = a;
            bu0 = u0; bu1 = u1; bv0 = v0; bv1 = v1;
            bdir = dir;
        }
    }
    if (!std::isfinite(best_area)) throw geometry_error("degenerate polygon for rectangle fit");

    const Point perp{-bdir.y, bdir.x};
    auto corner = [&](double u, double v) {
        return Point(bdir.x * u + perp.x * v, bdir.y * u + perp.y * v);
    };
    RotatedRect rect;
    rect.corners[0] = corner(bu0, bv0);
    rect.corners[1] = corner(bu1, bv0);
    rect.corners[2] = corner(bu1, bv1);
    rect.corners[3] = corner(bu0, bv1);
    if (signed_area(rect.to_polygon()) < 0.0)
        std::swap(rect.corners[1], rect.corners[3]);
    return rect;
}

namespace {

// Crossing positions of polygon edges with the horizontal line y == row,
// using a half-open [ylo, yhi) straddle rule so shared vertices count once.
void row_crossings(const Polygon& poly, double row, std::vector<double>& out) {
    out.clear();
    const auto& r = poly.ring;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        if ((a.y <= row && row < b.y) || (b.y <= row && row < a.y))
            out.push_back(a.x + (row - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(out.begin(), out.end());
}

// A pixel center is inside when the number of crossings strictly to its
// right is odd; identical rule to the per-pixel reference rasterizer.
template <typename Paint>
void scan_polygon(const Polygon& poly, int width, int height, Paint&& paint) {
    std::vector<double> xs;
    for (int y = 0; y < height; ++y) {
        row_crossings(poly, static_cast<double>(y), xs);
        for (std::size_t j = 0; j + 1 < xs.size(); j += 2) {
            int x0 = static_cast<int>(std::ceil(xs[j]));
            int x1 = static_cast<int>(std::ceil(xs[j + 1])) - 1;
            x0 = std::max(x0, 0);
            x1 = std::min(x1, width - 1);
            for (int x = x0; x <= x1; ++x) paint(x, y);
        }
    }
}

Polygon to_pixel_space(const Polygon& poly, int w, int h) {
    Polygon out;
    out.ring.reserve(poly.ring.size());
    for (const Point& p : poly.ring) out.ring.push_back(skeleton::denormalize_point(p, w, h));
    return out;
}

std::vector<std::size_t> painting_order(const FloorPlan& plan) {
    std::vector<std::size_t> order(plan.rooms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double aa = area(plan.rooms[a].polygon);
        const double ab = area(plan.rooms[b].polygon);
        if (aa != ab) return aa > ab;
        return plan.rooms[a].room_id < plan.rooms[b].room_id;
    });
    return order;
}

std::uint8_t room_label(const GridLabels& labels, const std::string& room_type) {
    const auto it = labels.room_type_labels.find(room_type);
    if (it == labels.room_type_labels.end())
        throw std::runtime_error("room type has no grid label: " + room_type);
    return static_cast<std::uint8_t>(it->second);
}

}  // namespace

void fill_polygon(Grid& grid, const Polygon& poly, std::uint8_t label) {
    scan_polygon(poly, grid.width, grid.height, [&](int x, int y) { grid.at(x, y) = label; });
}

void draw_segment(Grid& grid, const Segment& seg, std::uint8_t label) {
    const Point a = skeleton::denormalize_point(seg.p0, grid.width, grid.height);
    const Point b = skeleton::denormalize_point(seg.p1, grid.width, grid.height);
    int x0 = static_cast<int>(std::llround(a.x));
    int y0 = static_cast<int>(std::llround(a.y));
    const int x1 = static_cast<int>(std::llround(b.x));
    const int y1 = static_cast<int>(std::llround(b.y));
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        if (x0 >= 0 && x0 < grid.width && y0 >= 0 && y0 < grid.height) grid.at(x0, y0) = label;
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

Grid rasterize_floorplan(const FloorPlan& plan, int width, int height, const GridLabels& labels) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("rasterize_floorplan: grid dimensions must be positive");
    Grid grid(width, height, static_cast<std::uint8_t>(labels.background));
    grid.palette = labels.palette();

    for (std::size_t i : painting_order(plan)) {
        const Room& room = plan.rooms[i];
        const std::uint8_t label = room_label(labels, room.room_type);
        const Polygon px = to_pixel_space(room.polygon, width, height);
        // Rows are independent writes for one polygon.
        std::vector<double> xs;
#pragma omp parallel for schedule(static) private(xs)
        for (int y = 0; y < height; ++y) {
            row_crossings(px, static_cast<double>(y), xs);
            for (std::size_t j = 0; j + 1 < xs.size(); j += 2) {
                int x0 = std::max(static_cast<int>(std::ceil(xs[j])), 0);
                int x1 = std::min(static_cast<int>(std::ceil(xs[j + 1])) - 1, width - 1);
                for (int x = x0; x <= x1; ++x) grid.at(x, y) = label;
            }
        }
    }
    for (const Segment& seg : plan.walls.segments)
        draw_segment(grid, seg, static_cast<std::uint8_t>(labels.structure));
    return grid;
}

// ---------------------------------------------------------------------------
// cut_by_walls: local raster + flood fill + boundary tracing

namespace {

constexpr int kCutGrid = 512;

struct LocalFrame {
    double origin_x = 0, origin_y = 0, scale = 1;  // local = (p - origin) * scale
    Point to_local(const Point& p) const { return {(p.x - origin_x) * scale, (p.y - origin_y) * scale}; }
    Point to_world(double lx, double ly) const { return {lx / scale + origin_x, ly / scale + origin_y}; }
};

// Vertex key on the corner lattice of the local grid.
inline long long corner_key(int x, int y) { return static_cast<long long>(y) * (kCutGrid + 2) + x; }

Polygon trace_component_boundary(const std::vector<int>& comp, int label, const LocalFrame& frame) {
    // Directed boundary edges walked clockwise around each pixel.
    struct DirEdge {
        int x0, y0, x1, y1;
    };
    std::vector<DirEdge> edges;
    auto in_comp = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= kCutGrid || y >= kCutGrid) return false;
        return comp[static_cast<std::size_t>(y) * kCutGrid + x] == label;
    };
    for (int y = 0; y < kCutGrid; ++y) {
        for (int x = 0; x < kCutGrid; ++x) {
            if (!in_comp(x, y)) continue;
            if (!in_comp(x, y - 1)) edges.push_back({x, y, x + 1, y});
            if (!in_comp(x + 1, y)) edges.push_back({x + 1, y, x + 1, y + 1});
            if (!in_comp(x, y + 1)) edges.push_back({x + 1, y + 1, x, y + 1});
            if (!in_comp(x - 1, y)) edges.push_back({x, y + 1, x, y});
        }
    }

    std::multimap<long long, std::size_t> outgoing;
    for (std::size_t i = 0; i < edges.size(); ++i)
        outgoing.insert({corner_key(edges[i].x0, edges[i].y0), i});
    std::vector<bool> used(edges.size(), false);

    auto dir_of = [](const DirEdge& e) { return std::pair<int, int>{e.x1 - e.x0, e.y1 - e.y0}; };

    std::vector<std::vector<Point>> loops;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (used[start]) continue;
        std::vector<Point> loop;
        std::size_t cur = start;
        for (;;) {
            used[cur] = true;
            loop.emplace_back(edges[cur].x0, edges[cur].y0);
            const long long key = corner_key(edges[cur].x1, edges[cur].y1);
            auto [lo, hi] = outgoing.equal_range(key);
            std::size_t next = edges.size();
            // Prefer the sharpest right turn so diagonal-touch corners keep
            // separate loops apart.
            int best_rank = 5;
            const auto [dx, dy] = dir_of(edges[cur]);
            for (auto it = lo; it != hi; ++it) {
                if (used[it->second] && it->second != start) continue;
                const auto [nx, ny] = dir_of(edges[it->second]);
                int rank;
                if (nx == dy && ny == -dx) rank = 1;        // right turn
                else if (nx == dx && ny == dy) rank = 2;    // straight
                else if (nx == -dy && ny == dx) rank = 3;   // left turn
                else rank = 4;                              // reversal (never valid)
                if (rank < best_rank && !(it->second == start && rank == 4)) {
                    best_rank = rank;
                    next = it->second;
                }
            }
            if (next == edges.size() || next == start) break;
            if (used[next]) break;
            cur = next;
        }
        if (loop.size() >= 4) loops.push_back(std::move(loop));
    }

    // Outer boundary = loop with largest absolute area.
    double best = -1.0;
    const std::vector<Point>* outer = nullptr;
    for (const auto& l : loops) {
        const double a = std::fabs(signed_area(Polygon(l)));
        if (a > best) {
            best = a;
            outer = &l;
        }
    }
    if (!outer) throw geometry_error("component boundary tracing failed");

    // Collapse collinear runs, convert corner lattice -> pixel centers -> world.
    std::vector<Point> slim;
    const std::size_t n = outer->size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = (*outer)[(i + n - 1) % n];
        const Point& cur = (*outer)[i];
        const Point& nxt = (*outer)[(i + 1) % n];
        if (cross(prev, cur, nxt) != 0.0) slim.push_back(cur);
    }
    Polygon out;
    out.ring.reserve(slim.size());
    for (const Point& c : slim) out.ring.push_back(frame.to_world(c.x - 0.5, c.y - 0.5));
    if (signed_area(out) < 0.0) std::reverse(out.ring.begin(), out.ring.end());
    return out;
}

}  // namespace

std::vector<Polygon> cut_by_walls(const Polygon& poly, const WallSet& walls, double wall_eps) {
    validate_polygon(poly);
    if (walls.segments.empty()) return {poly};

    double minx = poly.ring[0].x, maxx = minx, miny = poly.ring[0].y, maxy = miny;
    for (const Point& p : poly.ring) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double pad = wall_eps + (std::max(maxx - minx, maxy - miny)) / kCutGrid * 2.0;
    LocalFrame frame;
    frame.origin_x = minx - pad;
    frame.origin_y = miny - pad;
    const double extent = std::max(maxx - minx, maxy - miny) + 2.0 * pad;
    frame.scale = (kCutGrid - 1) / extent;

    Polygon local;
    local.ring.reserve(poly.ring.size());
    for (const Point& p : poly.ring) local.ring.push_back(frame.to_local(p));

    // 0 outside, 1 polygon interior, 2 corridor over interior.
    std::vector<int> cells(static_cast<std::size_t>(kCutGrid) * kCutGrid, 0);
    scan_polygon(local, kCutGrid, kCutGrid,
                 [&](int x, int y) { cells[static_cast<std::size_t>(y) * kCutGrid + x] = 1; });

    // Pixel centers are 1 apart: a half-width under 0.75 can leave diagonal
    // leaks, so corridors are widened to that floor.
    const double eps_px = std::max(wall_eps * frame.scale, 0.75);
    bool corridor_hits = false;
    for (const Segment& seg : walls.segments) {
        const Point a = frame.to_local(seg.p0);
        const Point b = frame.to_local(seg.p1);
        const int x0 = std::max(static_cast<int>(std::floor(std::min(a.x, b.x) - eps_px)), 0);
        const int x1 = std::min(static_cast<int>(std::ceil(std::max(a.x, b.x) + eps_px)), kCutGrid - 1);
        const int y0 = std::max(static_cast<int>(std::floor(std::min(a.y, b.y) - eps_px)), 0);
        const int y1 = std::min(static_cast<int>(std::ceil(std::max(a.y, b.y) + eps_px)), kCutGrid - 1);
        bool hit = false;
#pragma omp parallel for schedule(static) reduction(|| : hit)
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                auto& c = cells[static_cast<std::size_t>(y) * kCutGrid + x];
                if (c == 1 && point_segment_distance(Point(x, y), a, b) <= eps_px) {
                    c = 2;
                    hit = true;
                }
            }
        }
        corridor_hits = corridor_hits || hit;
    }
    if (!corridor_hits) return {poly};

    // 4-connected flood fill over remaining interior; labels from 3 upward.
    std::vector<std::pair<int, std::size_t>> piece_sizes;  // label, pixel count
    int next_label = 3;
    std::deque<std::pair<int, int>> queue;
    for (int sy = 0; sy < kCutGrid; ++sy) {
        for (int sx = 0; sx < kCutGrid; ++sx) {
            if (cells[static_cast<std::size_t>(sy) * kCutGrid + sx] != 1) continue;
            const int label = next_label++;
            std::size_t count = 0;
            queue.push_back({sx, sy});
            cells[static_cast<std::size_t>(sy) * kCutGrid + sx] = label;
            while (!queue.empty()) {
                const auto [x, y] = queue.front();
                queue.pop_front();
                ++count;
                constexpr int kN[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (const auto& d : kN) {
                    const int nx = x + d[0], ny = y + d[1];
                    if (nx < 0 || ny < 0 || nx >= kCutGrid || ny >= kCutGrid) continue;
                    auto& c = cells[static_cast<std::size_t>(ny) * kCutGrid + nx];
                    if (c == 1) {
                        c = label;
                        queue.push_back({nx, ny});
                    }
                }
            }
            piece_sizes.push_back({label, count});
        }
    }

    std::vector<Polygon> pieces;
    for (const auto& [label, count] : piece_sizes) {
        if (count < 4) continue;  // sub-pixel slivers carry no geometry
        pieces.push_back(trace_component_boundary(cells, label, frame));
    }
    if (pieces.empty()) return {poly};
    return pieces;
}

Polygon refine_by_structure(const RotatedRect& rect, const WallSet& walls, double wall_eps) {
    const Polygon rect_poly = rect.to_polygon();
    const std::vector<Polygon> pieces = cut_by_walls(rect_poly, walls, wall_eps);
    const Polygon* best = nullptr;
    double best_area = -1.0;
    Point best_centroid;
    for (const Polygon& piece : pieces) {
        const double a = area(piece);
        const Point c = centroid(piece);
        const bool better =
            a > best_area ||
            (a == best_area && (c.x < best_centroid.x ||
                                (c.x == best_centroid.x && c.y < best_centroid.y)));
        if (better) {
            best = &piece;
            best_area = a;
            best_centroid = c;
        }
    }
    return best ? *best : rect_poly;
}

}  // namespace geometry

namespace serial {

namespace {

bool point_in_polygon(const Polygon& poly, double px, double py) {
    // Count crossings strictly right of the point along y == py.
    const auto& r = poly.ring;
    const std::size_t n = r.size();
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        if ((a.y <= py && py < b.y) || (b.y <= py && py < a.y)) {
            const double x = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x > px) ++crossings;
        }
    }
    return (crossings % 2) == 1;
}

}  // namespace

Grid rasterize_floorplan(const FloorPlan& plan, int width, int height, const GridLabels& labels) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("rasterize_floorplan: grid dimensions must be positive");
    Grid grid(width, height, static_cast<std::uint8_t>(labels.background));
    grid.palette = labels.palette();

    std::vector<std::size_t> order(plan.rooms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double aa = area(plan.rooms[a].polygon);
        const double ab = area(plan.rooms[b].polygon);
        if (aa != ab) return aa > ab;
        return plan.rooms[a].room_id < plan.rooms[b].room_id;
    });

    for (std::size_t i : order) {
        const Room& room = plan.rooms[i];
        const auto it = labels.room_type_labels.find(room.room_type);
        if (it == labels.room_type_labels.end())
            throw std::runtime_error("room type has no grid label: " + room.room_type);
        const std::uint8_t label = static_cast<std::uint8_t>(it->second);
        Polygon px;
        px.ring.reserve(room.polygon.ring.size());
        for (const Point& p : room.polygon.ring)
            px.ring.push_back(skeleton::denormalize_point(p, width, height));
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                if (point_in_polygon(px, x, y)) grid.at(x, y) = label;
    }
    for (const Segment& seg : plan.walls.segments)
        geometry::draw_segment(grid, seg, static_cast<std::uint8_t>(labels.structure));
    return grid;
}

}  // namespace serial

}  // namespace floorplan
