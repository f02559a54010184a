#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace floorplan {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline double length(const Point& v) { return std::hypot(v.x, v.y); }

inline double distance(const Point& a, const Point& b) { return length(b - a); }

// Perpendicular distance from p to the infinite line through a and b.
// Falls back to point distance when a == b.
inline double point_line_distance(const Point& p, const Point& a, const Point& b) {
    const double len = distance(a, b);
    if (len <= 0.0) return distance(p, a);
    return std::fabs(cross(a, b, p)) / len;
}

// Distance from p to the closed segment [a, b].
inline double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return distance(p, a + ab * t);
}

struct Segment {
    Point p0;
    Point p1;

    Segment() = default;
    Segment(Point a, Point b) : p0(a), p1(b) {}
    double length() const { return distance(p0, p1); }
};

class geometry_error : public std::runtime_error {
  public:
    explicit geometry_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Simple polygon stored as an open ring (implicit closing edge), CCW meaning
// positive signed area under the shoelace formula in stored coordinates.
struct Polygon {
    std::vector<Point> ring;

    Polygon() = default;
    explicit Polygon(std::vector<Point> pts) : ring(std::move(pts)) {}

    std::size_t size() const { return ring.size(); }
};

inline double signed_area(const Polygon& poly) {
    const auto& r = poly.ring;
    const std::size_t n = r.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        acc += a.x * b.y - a.y * b.x;
    }
    return 0.5 * acc;
}

inline double area(const Polygon& poly) { return std::fabs(signed_area(poly)); }

inline Point centroid(const Polygon& poly) {
    const auto& r = poly.ring;
    const std::size_t n = r.size();
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = r[i];
        const Point& q = r[(i + 1) % n];
        const double w = p.x * q.y - q.x * p.y;
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (std::fabs(a2) < 1e-300) {
        // Degenerate ring: fall back to the vertex mean.
        double sx = 0.0, sy = 0.0;
        for (const Point& p : r) { sx += p.x; sy += p.y; }
        return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

// Validity per the FloorPlan data model: at least 3 vertices, consecutive
// vertices distinct, positive signed area, no self-intersections.
bool is_simple(const Polygon& poly);
void validate_polygon(const Polygon& poly);

// Four corners in CCW order forming a rectangle (opposite sides equal,
// adjacent sides orthogonal, both within 1e-9 relative).
struct RotatedRect {
    Point corners[4];

    Polygon to_polygon() const { return Polygon({corners[0], corners[1], corners[2], corners[3]}); }
    double area() const;
};

}  // namespace floorplan
