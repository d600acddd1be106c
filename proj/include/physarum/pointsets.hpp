#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "physarum/error.hpp"
#include "physarum/geom.hpp"
#include "physarum/grid.hpp"

namespace physarum {

// A named planar layout: stimulus positions plus the stroke skeleton they
// were sampled from (used for illumination masks and spacing checks).
struct NamedShape {
    std::string name;
    PointSet points;
    std::vector<Segment> strokes;
};

namespace detail {

// Samples a polyline stroke every ~`spacing` cells, endpoints included.
inline void sample_stroke(NamedShape& shape, Vec2 a, Vec2 b, double spacing) {
    shape.strokes.push_back({a, b});
    const double len = distance(a, b);
    const int steps = std::max(1, static_cast<int>(std::round(len / spacing)));
    for (int k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) / steps;
        const Vec2 p = a + (b - a) * t;
        bool dup = false;
        for (const Vec2& q : shape.points)
            if (distance(q, p) < 1e-9) {
                dup = true;
                break;
            }
        if (!dup) shape.points.push_back(p);
    }
}

}  // namespace detail

// Letter 'H' node array for a 200x200 arena: two vertical strokes and a
// crossbar spanning most of the arena, one node per 10-cell interval.
inline NamedShape letter_h() {
    NamedShape s{"letter-H", {}, {}};
    detail::sample_stroke(s, {55, 40}, {55, 160}, 10.0);
    detail::sample_stroke(s, {145, 40}, {145, 160}, 10.0);
    detail::sample_stroke(s, {65, 100}, {135, 100}, 10.0);
    return s;
}

// Letter 'C' for a 300x300 arena: circular arc of radius 85 centred on the
// arena, gap facing +x, nodes every ~10 cells of arc length.
inline NamedShape letter_c() {
    NamedShape s{"letter-C", {}, {}};
    const Vec2 centre{150, 150};
    const double radius = 85.0;
    const int segments = 40;  // 270 degrees of arc
    Vec2 prev{};
    for (int k = 0; k <= segments; ++k) {
        const double angle_deg = 45.0 + 270.0 * k / segments;
        const double a = angle_deg * (std::numbers::pi / 180.0);
        const Vec2 p{centre.x + radius * std::cos(a), centre.y + radius * std::sin(a)};
        s.points.push_back(p);
        if (k > 0) s.strokes.push_back({prev, p});
        prev = p;
    }
    return s;
}

// Letter 'A' for a 200x200 arena: two legs meeting at the apex plus a
// crossbar, enclosing a vacant triangle.
inline NamedShape letter_a() {
    NamedShape s{"letter-A", {}, {}};
    detail::sample_stroke(s, {58, 40}, {100, 165}, 10.0);
    detail::sample_stroke(s, {142, 40}, {100, 165}, 10.0);
    detail::sample_stroke(s, {80, 90}, {120, 90}, 10.0);
    return s;
}

// Four nodes at the corners of a centred square, 200x200 arena.
inline NamedShape square_4() {
    return {"square-4", {{60, 60}, {140, 60}, {140, 140}, {60, 140}}, {}};
}

// 30-point stand-in for a national city layout, 300x300 arena. The
// coordinates are synthetic; only structural properties (connectivity, hull
// and footprint extraction) are meaningful.
inline NamedShape china_cities() {
    return {"china-cities",
            {{45, 160},  {65, 120},  {70, 190},  {90, 150},  {95, 95},   {110, 175},
             {120, 130}, {125, 75},  {140, 105}, {150, 155}, {155, 200}, {160, 65},
             {170, 125}, {180, 170}, {185, 90},  {195, 140}, {200, 210}, {205, 60},
             {210, 110}, {220, 160}, {225, 85},  {230, 130}, {235, 190}, {240, 105},
             {245, 60},  {250, 145}, {255, 170}, {255, 85},  {260, 120}, {245, 220}},
            {}};
}

// 12-point scatter for the shrinking-band and self-organisation runs,
// 200x200 arena: ten peripheral nodes and two interior ones. The scatter
// spans most of the arena so that an enclosing inoculation ring runs close
// to the lattice edge.
inline NamedShape scatter_12() {
    return {"scatter-12",
            {{32, 92},
             {52, 35},
             {92, 24},
             {142, 32},
             {171, 69},
             {176, 117},
             {154, 160},
             {108, 178},
             {63, 168},
             {29, 134},
             {86, 100},
             {125, 86}},
            {}};
}

// The same scatter shape kept central in the arena, leaving a wide exterior
// moat; used where the population organises from outside the point set.
inline NamedShape scatter_12_compact() {
    NamedShape s = scatter_12();
    s.name = "scatter-12-compact";
    for (Vec2& p : s.points) {
        p.x = 100 + (p.x - 100) / 1.7;
        p.y = 100 + (p.y - 100) / 1.7;
    }
    return s;
}

inline std::vector<std::string> builtin_pointset_names() {
    return {"letter-H",    "letter-C",   "letter-A",
            "square-4",    "china-cities", "scatter-12",
            "scatter-12-compact"};
}

inline NamedShape builtin_pointset(std::string_view name) {
    if (name == "letter-H") return letter_h();
    if (name == "letter-C") return letter_c();
    if (name == "letter-A") return letter_a();
    if (name == "square-4") return square_4();
    if (name == "china-cities") return china_cities();
    if (name == "scatter-12") return scatter_12();
    if (name == "scatter-12-compact") return scatter_12_compact();
    throw ConfigError("unknown point set: " + std::string(name));
}

// Raster of cells lying within `margin` of any stroke (protected, i.e. dark
// in an illumination layout built around a shape).
inline Grid<std::uint8_t> stroke_halo(const std::vector<Segment>& strokes, double margin,
                                      int width, int height) {
    Grid<std::uint8_t> halo(width, height, 0);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const Vec2 c{static_cast<double>(x), static_cast<double>(y)};
            for (const Segment& s : strokes) {
                if (point_segment_distance(c, s) <= margin) {
                    halo.at(x, y) = 1;
                    break;
                }
            }
        }
    }
    return halo;
}

}  // namespace physarum
