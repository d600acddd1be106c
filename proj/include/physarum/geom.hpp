#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "physarum/error.hpp"
#include "physarum/grid.hpp"

namespace physarum {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;

    double length() const { return std::hypot(x, y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
// > 0 when a->b->c turns counter-clockwise.
inline double orient2d(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }
inline double distance(Vec2 a, Vec2 b) { return (b - a).length(); }
inline double distance_sq(Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    return d.x * d.x + d.y * d.y;
}

struct Segment {
    Vec2 a, b;
    bool operator==(const Segment&) const = default;
    double length() const { return distance(a, b); }
};

inline double point_segment_distance(Vec2 p, const Segment& s) {
    const Vec2 ab = s.b - s.a;
    const double len_sq = dot(ab, ab);
    if (len_sq == 0.0) return distance(p, s.a);
    const double t = std::clamp(dot(p - s.a, ab) / len_sq, 0.0, 1.0);
    return distance(p, s.a + ab * t);
}

// Planar point collection, lattice cell units.
using PointSet = std::vector<Vec2>;

// Exact-duplicate removal; the relative order of first occurrences is kept.
inline PointSet normalized(PointSet ps) {
    PointSet out;
    out.reserve(ps.size());
    for (const Vec2& p : ps) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

// Simple polygon, counter-clockwise vertex order, closed implicitly.
struct Polygon {
    std::vector<Vec2> vertices;

    bool operator==(const Polygon&) const = default;

    double signed_area() const {
        double acc = 0.0;
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = vertices[i];
            const Vec2& b = vertices[(i + 1) % n];
            acc += cross(a, b);
        }
        return 0.5 * acc;
    }

    double area() const { return std::abs(signed_area()); }

    double perimeter() const {
        double acc = 0.0;
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i)
            acc += distance(vertices[i], vertices[(i + 1) % n]);
        return acc;
    }
};

inline bool point_on_polygon_boundary(const Polygon& poly, Vec2 p) {
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.vertices[i];
        const Vec2 b = poly.vertices[(i + 1) % n];
        if (orient2d(a, b, p) != 0.0) continue;
        if (p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
            p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y))
            return true;
    }
    return false;
}

// Even-odd ray crossing; `inclusive` decides whether boundary points count.
inline bool polygon_contains(const Polygon& poly, Vec2 p, bool inclusive = true) {
    if (poly.vertices.size() < 3) return false;
    if (point_on_polygon_boundary(poly, p)) return inclusive;
    bool inside = false;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2 a = poly.vertices[i];
        const Vec2 b = poly.vertices[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

// Distance from a point to the polygon boundary (0 on the boundary).
inline double polygon_boundary_distance(const Polygon& poly, Vec2 p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, point_segment_distance(
                                  p, Segment{poly.vertices[i], poly.vertices[(i + 1) % n]}));
    }
    return best;
}

// Andrew's monotone chain. Returns the counter-clockwise hull with strictly
// convex corners only (collinear boundary points are dropped); nullopt for
// degenerate input (< 3 distinct points, or all points collinear).
inline std::optional<Polygon> convex_hull(const PointSet& input) {
    PointSet pts = normalized(input);
    if (pts.size() < 3) return std::nullopt;
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {  // lower chain
        while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper chain
        while (k >= lower && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    if (hull.size() < 3) return std::nullopt;
    return Polygon{std::move(hull)};
}

struct Edge {
    int a = 0;
    int b = 0;
    double length = 0.0;
    bool operator==(const Edge&) const = default;
};

// Undirected edges over an indexed point set.
struct EdgeList {
    std::vector<Edge> edges;
    PointSet points;

    bool operator==(const EdgeList&) const = default;

    double total_length() const {
        return std::accumulate(edges.begin(), edges.end(), 0.0,
                               [](double acc, const Edge& e) { return acc + e.length; });
    }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

// Kruskal over all pairs; equal-length edges break ties by lexicographic
// (a, b) index order so the tree is unique for any input.
inline EdgeList euclidean_mst(const PointSet& points) {
    if (points.size() < 2)
        throw std::invalid_argument("euclidean_mst: need at least 2 points");
    const int n = static_cast<int>(points.size());
    std::vector<Edge> all;
    all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all.push_back({i, j, distance(points[i], points[j])});
    std::sort(all.begin(), all.end(), [](const Edge& l, const Edge& r) {
        if (l.length != r.length) return l.length < r.length;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });

    EdgeList mst;
    mst.points = points;
    detail::UnionFind uf(points.size());
    for (const Edge& e : all) {
        if (uf.unite(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b))) {
            mst.edges.push_back(e);
            if (static_cast<int>(mst.edges.size()) == n - 1) break;
        }
    }
    return mst;
}

// Reference alpha-shape boundary, brute force O(n^3). An edge (a, b) belongs
// to the shape iff one of the two discs of radius `disc_radius` through a and
// b contains no other point strictly inside. Grows toward the convex hull as
// the radius grows and empties once 2*radius drops below the closest pair
// distance.
inline EdgeList alpha_shape_by_radius(const PointSet& input, double disc_radius) {
    if (disc_radius <= 0.0)
        throw std::invalid_argument("alpha_shape: disc radius must be positive");
    const PointSet pts = normalized(input);
    const int n = static_cast<int>(pts.size());
    EdgeList shape;
    shape.points = pts;
    const double r_sq = disc_radius * disc_radius;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = distance(pts[i], pts[j]);
            if (d > 2.0 * disc_radius) continue;
            const Vec2 mid = (pts[i] + pts[j]) * 0.5;
            const double h = std::sqrt(std::max(0.0, r_sq - 0.25 * d * d));
            const Vec2 unit = (pts[j] - pts[i]) * (1.0 / d);
            const Vec2 normal{-unit.y, unit.x};
            for (const Vec2 centre : {mid + normal * h, mid - normal * h}) {
                bool empty = true;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (distance_sq(pts[k], centre) < r_sq) {
                        empty = false;
                        break;
                    }
                }
                if (empty) {
                    shape.edges.push_back({i, j, d});
                    break;
                }
            }
        }
    }
    return shape;
}

// Alpha parameterisation: disc radius 1/alpha, so the hull is recovered as
// alpha -> 0 and the shape collapses to bare points as alpha grows.
inline EdgeList alpha_shape_reference(const PointSet& points, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha_shape: alpha must be positive");
    return alpha_shape_by_radius(points, 1.0 / alpha);
}

// Symmetric Hausdorff distance between non-empty point sets.
inline double hausdorff(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff: point sets must be non-empty");
    const auto one_way = [](const PointSet& from, const PointSet& to) {
        double worst = 0.0;
        for (const Vec2& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Vec2& q : to) best = std::min(best, distance_sq(p, q));
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(one_way(a, b), one_way(b, a));
}

// Rasterises the polygon onto a lattice: cell (x, y) is set when the point
// (x, y) lies inside or on the polygon. Integer-coordinate vertices make the
// boundary test exact.
inline Grid<std::uint8_t> rasterize_filled(const Polygon& poly, int width, int height) {
    Grid<std::uint8_t> mask(width, height, 0);
    if (poly.vertices.size() < 3) return mask;
    double min_x = poly.vertices[0].x, max_x = min_x;
    double min_y = poly.vertices[0].y, max_y = min_y;
    for (const Vec2& v : poly.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const int x0 = std::max(0, static_cast<int>(std::floor(min_x)));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(max_x)));
    const int y0 = std::max(0, static_cast<int>(std::floor(min_y)));
    const int y1 = std::min(height - 1, static_cast<int>(std::ceil(max_y)));
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            if (polygon_contains(poly, {static_cast<double>(x), static_cast<double>(y)}, true))
                mask.at(x, y) = 1;
    return mask;
}

}  // namespace physarum
