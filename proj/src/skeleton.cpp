#include "floorplan/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "floorplan/raster.hpp"

namespace floorplan::skeleton {

namespace {

// Clockwise from north; fixed order keeps tracing deterministic.
constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

inline std::size_t idx(const BinaryMask& m, int x, int y) {
    return static_cast<std::size_t>(y) * m.width + x;
}

int degree(const BinaryMask& m, int x, int y) {
    int d = 0;
    for (int k = 0; k < 8; ++k)
        if (m.at_or_false(x + kDx[k], y + kDy[k])) ++d;
    return d;
}

bool lex_less(const PixelCoord& a, const PixelCoord& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace

SkeletonGraph extract_graph(const BinaryMask& mask) {
    SkeletonGraph g;
    const int w = mask.width, h = mask.height;
    if (w == 0 || h == 0) return g;

    std::vector<int> deg(mask.bits.size(), -1);
    std::vector<int> node_id(mask.bits.size(), -1);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (mask.get(x, y)) deg[idx(mask, x, y)] = degree(mask, x, y);

    auto is_node_pixel = [&](int x, int y) {
        const int d = deg[idx(mask, x, y)];
        return d == 0 || d == 1 || d >= 3;
    };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (mask.get(x, y) && is_node_pixel(x, y)) {
                node_id[idx(mask, x, y)] = static_cast<int>(g.nodes.size());
                g.nodes.push_back({x, y});
            }
        }
    }

    // Half-edges already consumed by a trace, keyed by (pixel, direction).
    std::set<std::pair<std::size_t, int>> used;
    std::vector<std::uint8_t> path_visited(mask.bits.size(), 0);

    auto trace = [&](PixelCoord start, int dir) {
        SkeletonGraph::Edge edge;
        edge.node_a = node_id[idx(mask, start.x, start.y)];
        edge.pixel_path.push_back(start);
        used.insert({idx(mask, start.x, start.y), dir});
        PixelCoord prev = start;
        PixelCoord cur{start.x + kDx[dir], start.y + kDy[dir]};
        for (;;) {
            edge.pixel_path.push_back(cur);
            const std::size_t ci = idx(mask, cur.x, cur.y);
            if (node_id[ci] >= 0) {
                // Mark the arrival direction so the edge is not retraced.
                for (int k = 0; k < 8; ++k)
                    if (cur.x + kDx[k] == prev.x && cur.y + kDy[k] == prev.y) used.insert({ci, k});
                edge.node_b = node_id[ci];
                break;
            }
            path_visited[ci] = 1;
            PixelCoord next{-1, -1};
            for (int k = 0; k < 8; ++k) {
                const int nx = cur.x + kDx[k], ny = cur.y + kDy[k];
                if (!mask.at_or_false(nx, ny)) continue;
                if (nx == prev.x && ny == prev.y) continue;
                next = {nx, ny};
                break;
            }
            prev = cur;
            cur = next;
        }
        g.edges.push_back(std::move(edge));
    };

    // Edges out of every node pixel.
    for (std::size_t ni = 0; ni < g.nodes.size(); ++ni) {
        const PixelCoord n = g.nodes[ni];
        const std::size_t nidx = idx(mask, n.x, n.y);
        for (int k = 0; k < 8; ++k) {
            const int mx = n.x + kDx[k], my = n.y + kDy[k];
            if (!mask.at_or_false(mx, my)) continue;
            if (used.count({nidx, k})) continue;
            if (node_id[idx(mask, mx, my)] >= 0) {
                // Adjacent node pixels form a two-pixel edge; emit it once.
                const PixelCoord m{mx, my};
                if (lex_less(n, m)) {
                    g.edges.push_back({static_cast<int>(ni), node_id[idx(mask, mx, my)], {n, m}});
                }
                continue;
            }
            trace(n, k);
        }
    }

    // Remaining unvisited degree-2 pixels are pure cycles: promote the
    // lexicographically smallest pixel of each to a node with a self-edge.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = idx(mask, x, y);
            if (!mask.get(x, y) || deg[i] != 2 || path_visited[i] || node_id[i] >= 0) continue;
            node_id[i] = static_cast<int>(g.nodes.size());
            g.nodes.push_back({x, y});
            for (int k = 0; k < 8; ++k) {
                if (mask.at_or_false(x + kDx[k], y + kDy[k]) && !used.count({i, k})) {
                    trace({x, y}, k);
                    break;
                }
            }
        }
    }
    return g;
}

namespace {

void split_recursive(const std::vector<PixelCoord>& path, std::size_t lo, std::size_t hi,
                     double tolerance, std::vector<Segment>& out) {
    const Point a(path[lo].x, path[lo].y);
    const Point b(path[hi].x, path[hi].y);
    double max_dev = 0.0;
    std::size_t split_at = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const double dev = point_line_distance(Point(path[i].x, path[i].y), a, b);
        if (dev > max_dev) {
            max_dev = dev;
            split_at = i;
        }
    }
    if (max_dev > tolerance && split_at != lo) {
        split_recursive(path, lo, split_at, tolerance, out);
        split_recursive(path, split_at, hi, tolerance, out);
    } else {
        out.emplace_back(a, b);
    }
}

}  // namespace

std::vector<Segment> split_straight(const std::vector<PixelCoord>& path, double tolerance) {
    std::vector<Segment> out;
    if (path.size() < 2) return out;
    split_recursive(path, 0, path.size() - 1, tolerance, out);
    return out;
}

std::vector<Segment> filter_short(const std::vector<Segment>& segments, double min_length) {
    std::vector<Segment> out;
    out.reserve(segments.size());
    for (const Segment& s : segments)
        if (s.length() >= min_length) out.push_back(s);
    return out;
}

Point normalize_pixel(double x, double y, int w, int h) {
    const double cx = (w - 1) * 0.5;
    const double cy = (h - 1) * 0.5;
    const int longest = std::max(w, h) - 1;
    const double scale = longest > 0 ? 2.0 / static_cast<double>(longest) : 0.0;
    return {(x - cx) * scale, (y - cy) * scale};
}

Point denormalize_point(const Point& p, int w, int h) {
    const double cx = (w - 1) * 0.5;
    const double cy = (h - 1) * 0.5;
    const int longest = std::max(w, h) - 1;
    const double scale = longest > 0 ? static_cast<double>(longest) / 2.0 : 0.0;
    return {p.x * scale + cx, p.y * scale + cy};
}

WallSet vectorize_walls(const BinaryMask& mask, double tolerance, double min_length) {
    WallSet walls;
    walls.source_width = mask.width;
    walls.source_height = mask.height;

    const BinaryMask thinned = raster::thin(mask);
    const SkeletonGraph graph = extract_graph(thinned);

    std::vector<Segment> pixel_segments;
    for (const auto& edge : graph.edges) {
        const auto parts = split_straight(edge.pixel_path, tolerance);
        pixel_segments.insert(pixel_segments.end(), parts.begin(), parts.end());
    }
    pixel_segments = filter_short(pixel_segments, min_length);

    walls.segments.reserve(pixel_segments.size());
    for (const Segment& s : pixel_segments) {
        walls.segments.emplace_back(normalize_pixel(s.p0.x, s.p0.y, mask.width, mask.height),
                                    normalize_pixel(s.p1.x, s.p1.y, mask.width, mask.height));
    }
    return walls;
}

}  // namespace floorplan::skeleton
