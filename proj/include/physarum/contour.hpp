#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "physarum/geom.hpp"
#include "physarum/grid.hpp"

namespace physarum {

// Occupied-cell raster; nonzero = part of the blob.
using BlobMask = Grid<std::uint8_t>;

struct CellCoord {
    int x = 0;
    int y = 0;
    bool operator==(const CellCoord&) const = default;
};

inline std::int64_t blob_area(const BlobMask& blob) {
    std::int64_t n = 0;
    for (std::uint8_t c : blob.data()) n += (c != 0);
    return n;
}

// Connected components with 8-connectivity.
inline int count_components_8(const BlobMask& blob) {
    Grid<std::uint8_t> seen(blob.width(), blob.height(), 0);
    std::vector<CellCoord> stack;
    int components = 0;
    for (int y = 0; y < blob.height(); ++y) {
        for (int x = 0; x < blob.width(); ++x) {
            if (blob.at(x, y) == 0 || seen.at(x, y)) continue;
            ++components;
            seen.at(x, y) = 1;
            stack.push_back({x, y});
            while (!stack.empty()) {
                const CellCoord c = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = c.x + dx, ny = c.y + dy;
                        if (!blob.in_bounds(nx, ny) || seen.at(nx, ny) ||
                            blob.at(nx, ny) == 0)
                            continue;
                        seen.at(nx, ny) = 1;
                        stack.push_back({nx, ny});
                    }
                }
            }
        }
    }
    return components;
}

// Moore-neighbour boundary tracing over an 8-connected blob. The walk keeps
// the blob on its left (counter-clockwise in the y-up frame), scanning each
// Moore neighbourhood from the backtrack cell. The trace state is the pair
// (cell, backtrack direction); one full lap of the outer contour is the cell
// sequence between two visits of the same state. Cells repeat where the blob
// is one cell thick.
inline std::vector<CellCoord> trace_boundary(const BlobMask& blob) {
    // Moore neighbourhood in counter-clockwise order.
    static constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    static constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

    CellCoord start{-1, -1};
    for (int y = 0; y < blob.height() && start.x < 0; ++y)
        for (int x = 0; x < blob.width(); ++x)
            if (blob.at(x, y) != 0) {
                start = {x, y};
                break;
            }
    if (start.x < 0) throw std::invalid_argument("trace_boundary: empty blob");

    const auto occupied = [&](CellCoord c) {
        return blob.in_bounds(c.x, c.y) && blob.at(c.x, c.y) != 0;
    };
    const auto dir_of = [](CellCoord from, CellCoord to) {
        for (int d = 0; d < 8; ++d)
            if (to.x - from.x == kDx[d] && to.y - from.y == kDy[d]) return d;
        throw std::logic_error("trace_boundary: cells not adjacent");
    };

    // The row below the start cell is empty, so the south neighbour is a
    // valid background backtrack.
    CellCoord current = start;
    CellCoord backtrack{start.x, start.y - 1};

    // state -> number of cells appended when it was first visited, or -1
    std::vector<long> seen(blob.size() * 8, -1);
    const auto state_index = [&](CellCoord c, int back_dir) {
        return (static_cast<std::size_t>(c.y) * blob.width() +
                static_cast<std::size_t>(c.x)) * 8 + static_cast<std::size_t>(back_dir);
    };

    std::vector<CellCoord> appended;
    long lap_start = -1;
    while (true) {
        const int back_dir = dir_of(current, backtrack);
        long& mark = seen[state_index(current, back_dir)];
        if (mark >= 0) {
            lap_start = mark;
            break;
        }
        mark = static_cast<long>(appended.size());

        int found = -1;
        CellCoord prev = backtrack;
        for (int step = 1; step <= 8; ++step) {
            const int dir = (back_dir + step) % 8;
            const CellCoord n{current.x + kDx[dir], current.y + kDy[dir]};
            if (occupied(n)) {
                found = dir;
                break;
            }
            prev = n;
        }
        if (found < 0) return {start};  // isolated cell
        backtrack = prev;
        current = {current.x + kDx[found], current.y + kDy[found]};
        appended.push_back(current);
    }
    // one lap: the cells appended since the repeated state was first seen
    return {appended.begin() + lap_start, appended.end()};
}

struct ShapeMetrics {
    std::int64_t area = 0;       // occupied cell count
    std::int64_t perimeter = 0;  // occupied cells with an empty 4-neighbour
    double concavity = 0.0;      // 1 - area / area(filled convex hull)
};

// Area, boundary-cell perimeter, and concavity of a blob raster. Out-of-bounds
// neighbours count as empty, so cells on the lattice rim are boundary cells.
inline ShapeMetrics shape_metrics(const BlobMask& blob) {
    ShapeMetrics m;
    PointSet cells;
    for (int y = 0; y < blob.height(); ++y) {
        for (int x = 0; x < blob.width(); ++x) {
            if (blob.at(x, y) == 0) continue;
            ++m.area;
            cells.push_back({static_cast<double>(x), static_cast<double>(y)});
            const bool boundary = blob.value_or(x + 1, y, 0) == 0 ||
                                  blob.value_or(x - 1, y, 0) == 0 ||
                                  blob.value_or(x, y + 1, 0) == 0 ||
                                  blob.value_or(x, y - 1, 0) == 0;
            if (boundary) ++m.perimeter;
        }
    }
    if (m.area == 0) throw std::invalid_argument("shape_metrics: empty blob");

    const std::optional<Polygon> hull = convex_hull(cells);
    if (!hull) return m;  // 1-2 cells or collinear: blob equals its hull fill
    const std::int64_t hull_area = blob_area(rasterize_filled(*hull, blob.width(), blob.height()));
    if (hull_area > 0 && hull_area >= m.area)
        m.concavity = 1.0 - static_cast<double>(m.area) / static_cast<double>(hull_area);
    return m;
}

struct BlobDisconnected : std::runtime_error {
    int components;
    explicit BlobDisconnected(int n)
        : std::runtime_error("blob is not 8-connected: " + std::to_string(n) +
                             " components"),
          components(n) {}
};

// Walks the blob perimeter and collects the nodes lying within `tolerance`
// of the traced boundary, in traversal order, joined by straight edges.
// Throws BlobDisconnected for multi-component blobs; nullopt when fewer than
// three peripheral nodes are found.
inline std::optional<Polygon> extract_concave_hull(const BlobMask& blob, const PointSet& nodes,
                                                   double tolerance = 3.0) {
    const int components = count_components_8(blob);
    if (components != 1) throw BlobDisconnected(components);

    const std::vector<CellCoord> boundary = trace_boundary(blob);
    const double tol_sq = tolerance * tolerance;
    std::vector<bool> taken(nodes.size(), false);
    std::vector<Vec2> ordered;
    for (const CellCoord& c : boundary) {
        const Vec2 cell{static_cast<double>(c.x), static_cast<double>(c.y)};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (taken[i] || distance_sq(nodes[i], cell) > tol_sq) continue;
            taken[i] = true;
            ordered.push_back(nodes[i]);
        }
    }
    if (ordered.size() < 3) return std::nullopt;

    Polygon poly{std::move(ordered)};
    if (poly.signed_area() < 0.0)
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

}  // namespace physarum
