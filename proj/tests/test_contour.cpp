#include <catch2/catch.hpp>

#include <cmath>

#include "physarum/contour.hpp"
#include "physarum/rng.hpp"

using namespace physarum;

namespace {

BlobMask filled_rect(int w, int h, int x0, int y0, int x1, int y1) {
    BlobMask blob(w, h, 0);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) blob.at(x, y) = 1;
    return blob;
}

BlobMask filled_disc(int w, int h, double cx, double cy, double r) {
    BlobMask blob(w, h, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (std::hypot(x - cx, y - cy) <= r) blob.at(x, y) = 1;
    return blob;
}

// polygons equal up to rotation of the vertex cycle
bool same_cycle(const Polygon& a, const Polygon& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    const std::size_t n = a.vertices.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n; ++i)
            if (!(a.vertices[(i + shift) % n] == b.vertices[i])) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("boundary tracing walks the blob edge") {
    SECTION("single cell") {
        BlobMask one(5, 5, 0);
        one.at(2, 2) = 1;
        const auto boundary = trace_boundary(one);
        REQUIRE(boundary == std::vector<CellCoord>{{2, 2}});
    }
    SECTION("filled square visits exactly the rim cells") {
        const BlobMask blob = filled_rect(12, 12, 3, 3, 8, 8);
        const auto boundary = trace_boundary(blob);
        // 6x6 block: rim holds 6*4 - 4 cells, each visited once
        REQUIRE(boundary.size() == 20);
        for (const CellCoord& c : boundary) REQUIRE(blob.at(c.x, c.y) == 1);
        for (std::size_t i = 0; i + 1 < boundary.size(); ++i) {
            const int dx = std::abs(boundary[i + 1].x - boundary[i].x);
            const int dy = std::abs(boundary[i + 1].y - boundary[i].y);
            REQUIRE(std::max(dx, dy) == 1);  // 8-adjacent steps
        }
    }
    SECTION("one-cell-thick bar is walked there and back") {
        BlobMask bar(8, 3, 0);
        for (int x = 1; x <= 6; ++x) bar.at(x, 1) = 1;
        const auto boundary = trace_boundary(bar);
        REQUIRE(boundary.size() == 10);  // 6 cells, 4 interior visited twice
    }
    SECTION("empty blob throws") {
        REQUIRE_THROWS_AS(trace_boundary(BlobMask(4, 4, 0)), std::invalid_argument);
    }
}

TEST_CASE("component counting distinguishes 8-connectivity") {
    BlobMask blob(10, 10, 0);
    blob.at(1, 1) = 1;
    blob.at(2, 2) = 1;  // diagonal: same component
    blob.at(5, 5) = 1;  // far away: second component
    REQUIRE(count_components_8(blob) == 2);
    REQUIRE(count_components_8(BlobMask(4, 4, 0)) == 0);
}

TEST_CASE("shape metrics of rectangles, bites and single cells") {
    SECTION("filled 10x10 square") {
        const ShapeMetrics m = shape_metrics(filled_rect(20, 20, 5, 5, 14, 14));
        REQUIRE(m.area == 100);
        REQUIRE(m.perimeter == 36);
        REQUIRE(m.concavity == 0.0);
    }
    SECTION("4x4 bite on the edge raises concavity to 16/100") {
        // notch in the middle of the top edge: the hull stays the full square
        BlobMask blob = filled_rect(20, 20, 5, 5, 14, 14);
        for (int y = 11; y <= 14; ++y)
            for (int x = 8; x <= 11; ++x) blob.at(x, y) = 0;
        const ShapeMetrics m = shape_metrics(blob);
        REQUIRE(m.area == 84);
        REQUIRE(m.concavity == Approx(0.16));
    }
    SECTION("4x4 corner bite: the hull cuts the corner diagonally") {
        BlobMask blob = filled_rect(20, 20, 5, 5, 14, 14);
        for (int y = 11; y <= 14; ++y)
            for (int x = 11; x <= 14; ++x) blob.at(x, y) = 0;
        const ShapeMetrics m = shape_metrics(blob);
        REQUIRE(m.area == 84);
        // hull raster keeps the 6 bite cells on or under the x+y=24 diagonal
        REQUIRE(m.concavity == Approx(6.0 / 90.0));
    }
    SECTION("single cell") {
        BlobMask blob(5, 5, 0);
        blob.at(3, 3) = 1;
        const ShapeMetrics m = shape_metrics(blob);
        REQUIRE(m.area == 1);
        REQUIRE(m.perimeter == 1);
        REQUIRE(m.concavity == 0.0);
    }
    SECTION("empty blob rejected") {
        REQUIRE_THROWS_AS(shape_metrics(BlobMask(5, 5, 0)), std::invalid_argument);
    }
}

TEST_CASE("convex rasters stay near zero concavity") {
    Rng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        // random convex polygon: hull of a small scatter
        PointSet pts;
        for (int i = 0; i < 12; ++i)
            pts.push_back({10 + rng.uniform() * 40, 10 + rng.uniform() * 40});
        const auto hull = convex_hull(pts);
        REQUIRE(hull);
        const BlobMask blob = rasterize_filled(*hull, 60, 60);
        REQUIRE(shape_metrics(blob).concavity <= 0.05);
    }
}

TEST_CASE("concave hull extraction from synthetic blobs") {
    SECTION("square blob with its corner nodes") {
        const BlobMask blob = filled_rect(20, 20, 4, 4, 15, 15);
        const PointSet corners{{4, 4}, {15, 4}, {15, 15}, {4, 15}};
        const auto hull = extract_concave_hull(blob, corners, 3.0);
        REQUIRE(hull);
        REQUIRE(hull->vertices.size() == 4);
        REQUIRE(same_cycle(*hull, Polygon{corners}));
        REQUIRE(hull->signed_area() > 0.0);
    }
    SECTION("disc with six rim nodes comes back in rim order") {
        const BlobMask blob = filled_disc(40, 40, 20, 20, 14);
        PointSet rim;
        for (int k = 0; k < 6; ++k) {
            const double a = k * std::numbers::pi / 3.0;
            rim.push_back({20 + 14 * std::cos(a), 20 + 14 * std::sin(a)});
        }
        const auto hull = extract_concave_hull(blob, rim, 3.0);
        REQUIRE(hull);
        REQUIRE(hull->vertices.size() == 6);
        const auto oracle = convex_hull(rim);
        REQUIRE(oracle);
        REQUIRE(same_cycle(*hull, *oracle));
    }
    SECTION("blob equal to the filled node hull reproduces convex_hull") {
        Rng rng(99);
        PointSet pts;
        for (int i = 0; i < 9; ++i)
            pts.push_back({std::floor(8 + rng.uniform() * 44),
                           std::floor(8 + rng.uniform() * 44)});
        const auto oracle = convex_hull(pts);
        REQUIRE(oracle);
        const BlobMask blob = rasterize_filled(*oracle, 60, 60);
        // keep only hull vertices as nodes: interior points may sit near the
        // boundary and would legitimately join the traversal
        const auto hull = extract_concave_hull(blob, oracle->vertices, 3.0);
        REQUIRE(hull);
        REQUIRE(same_cycle(*hull, *oracle));
    }
    SECTION("disconnected blobs are reported") {
        BlobMask blob(20, 20, 0);
        blob.at(2, 2) = 1;
        blob.at(10, 10) = 1;
        REQUIRE_THROWS_AS(extract_concave_hull(blob, {{2, 2}, {10, 10}, {5, 5}}, 3.0),
                          BlobDisconnected);
    }
    SECTION("too few peripheral nodes is degenerate") {
        const BlobMask blob = filled_rect(20, 20, 4, 4, 15, 15);
        REQUIRE_FALSE(extract_concave_hull(blob, {{4, 4}, {15, 15}}, 3.0));
        // nodes far from the boundary never join
        REQUIRE_FALSE(extract_concave_hull(blob, {{9, 9}, {10, 9}, {9, 10}}, 3.0));
    }
}
