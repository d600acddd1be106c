#include <catch2/catch.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "physarum/geom.hpp"
#include "physarum/rng.hpp"

using namespace physarum;

namespace {

PointSet random_points(Rng& rng, int n, double lo = 0.0, double hi = 100.0) {
    PointSet ps;
    for (int i = 0; i < n; ++i)
        ps.push_back({lo + rng.uniform() * (hi - lo), lo + rng.uniform() * (hi - lo)});
    return ps;
}

std::set<std::pair<double, double>> as_set(const PointSet& ps) {
    std::set<std::pair<double, double>> s;
    for (const Vec2& p : ps) s.insert({p.x, p.y});
    return s;
}

std::set<std::pair<int, int>> edge_set(const EdgeList& list) {
    std::set<std::pair<int, int>> s;
    for (const Edge& e : list.edges) s.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    return s;
}

}  // namespace

TEST_CASE("convex hull of the unit square corners") {
    const PointSet square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const auto hull = convex_hull(square);
    REQUIRE(hull);
    REQUIRE(hull->vertices.size() == 4);
    REQUIRE(as_set(hull->vertices) == as_set(square));
    REQUIRE(hull->signed_area() > 0.0);  // counter-clockwise
}

TEST_CASE("interior and collinear boundary points are excluded") {
    const PointSet with_centre{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
    auto hull = convex_hull(with_centre);
    REQUIRE(hull);
    REQUIRE(hull->vertices.size() == 4);

    const PointSet with_edge_midpoints{{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {0, 1}};
    hull = convex_hull(with_edge_midpoints);
    REQUIRE(hull);
    REQUIRE(hull->vertices.size() == 4);
    REQUIRE(as_set(hull->vertices) == as_set({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
}

TEST_CASE("degenerate hulls are reported as such") {
    REQUIRE_FALSE(convex_hull({{0, 0}, {1, 1}}));
    REQUIRE_FALSE(convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
    REQUIRE_FALSE(convex_hull({{5, 5}, {5, 5}, {5, 5}}));
}

TEST_CASE("hull matches the triangle-containment oracle on random sets") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const PointSet pts = random_points(rng, 50);
        const auto hull = convex_hull(pts);
        REQUIRE(hull);
        REQUIRE(as_set(hull->vertices) == as_set(oracles::brute_hull_vertices(pts)));
    }
}

TEST_CASE("hull properties: containment and minimality") {
    Rng rng(77);
    const PointSet pts = random_points(rng, 60);
    const auto hull = convex_hull(pts);
    REQUIRE(hull);
    // every input point lies inside or on the hull
    for (const Vec2& p : pts) REQUIRE(polygon_contains(*hull, p, true));
    // dropping any vertex loses at least one input point
    for (std::size_t drop = 0; drop < hull->vertices.size(); ++drop) {
        Polygon smaller = *hull;
        smaller.vertices.erase(smaller.vertices.begin() + static_cast<long>(drop));
        bool lost = false;
        for (const Vec2& p : pts)
            if (!polygon_contains(smaller, p, true)) {
                lost = true;
                break;
            }
        REQUIRE(lost);
    }
}

TEST_CASE("mst of two points and of the unit square") {
    const EdgeList two = euclidean_mst({{0, 0}, {3, 4}});
    REQUIRE(two.edges.size() == 1);
    REQUIRE(two.edges[0].length == Approx(5.0));

    const EdgeList square = euclidean_mst({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    REQUIRE(square.edges.size() == 3);
    REQUIRE(square.total_length() == Approx(3.0));
    // deterministic tie-break: lexicographically first sides win
    REQUIRE(edge_set(square) == std::set<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("mst rejects tiny inputs") {
    REQUIRE_THROWS_AS(euclidean_mst({}), std::invalid_argument);
    REQUIRE_THROWS_AS(euclidean_mst({{1, 2}}), std::invalid_argument);
}

TEST_CASE("mst length matches exhaustive enumeration for 7 points") {
    Rng rng(9001);
    for (int trial = 0; trial < 25; ++trial) {
        const PointSet pts = random_points(rng, 7);
        const EdgeList mst = euclidean_mst(pts);
        REQUIRE(mst.edges.size() == 6);
        const double best = oracles::exhaustive_mst_length(pts);
        REQUIRE(mst.total_length() == Approx(best).epsilon(1e-9));
    }
}

TEST_CASE("mst is a spanning tree") {
    Rng rng(31337);
    const PointSet pts = random_points(rng, 40);
    const EdgeList mst = euclidean_mst(pts);
    REQUIRE(mst.edges.size() == pts.size() - 1);
    // connectivity via union-find over the returned edges
    std::vector<int> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (const Edge& e : mst.edges) {
        const int ra = find(e.a), rb = find(e.b);
        REQUIRE(ra != rb);  // acyclic
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    for (std::size_t v = 1; v < pts.size(); ++v)
        REQUIRE(find(static_cast<int>(v)) == find(0));
}

TEST_CASE("alpha shape of a triangle admits all edges once discs fit the circumcircle") {
    // circumradius of this 3-4-5 right triangle is 2.5 (hypotenuse / 2)
    const PointSet tri{{0, 0}, {3, 0}, {0, 4}};
    const EdgeList at_r26 = alpha_shape_by_radius(tri, 2.6);
    REQUIRE(at_r26.edges.size() == 3);
    // just below the circumradius the hypotenuse disc still fits (empty), and
    // discs through the legs fit as well
    const EdgeList at_r24 = alpha_shape_by_radius(tri, 2.51);
    REQUIRE(at_r24.edges.size() == 3);
}

TEST_CASE("alpha shape limits: hull superset at huge radius, empty at tiny radius") {
    Rng rng(555);
    const PointSet pts = random_points(rng, 30);

    double diameter = 0.0, min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            diameter = std::max(diameter, distance(pts[i], pts[j]));
            min_dist = std::min(min_dist, distance(pts[i], pts[j]));
        }

    // an exterior disc through a hull edge of length d still bulges inward by
    // d^2/(8r); at 1000x the diameter that sagitta is well under the clearance
    // of these point sets, so every hull edge admits an empty disc
    const EdgeList big = alpha_shape_by_radius(pts, diameter * 1000.0);
    const auto hull = convex_hull(pts);
    REQUIRE(hull);
    const auto big_edges = edge_set(big);
    // every hull edge appears in the shape
    const auto index_of = [&](Vec2 v) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == v) return static_cast<int>(i);
        FAIL("hull vertex not found in inputs");
        return -1;
    };
    const std::size_t n = hull->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int a = index_of(hull->vertices[i]);
        const int b = index_of(hull->vertices[(i + 1) % n]);
        REQUIRE(big_edges.count({std::min(a, b), std::max(a, b)}) == 1);
    }

    const EdgeList tiny = alpha_shape_by_radius(pts, min_dist * 0.49);
    REQUIRE(tiny.edges.empty());
}

TEST_CASE("alpha parameterisation maps alpha to disc radius 1/alpha") {
    const PointSet tri{{0, 0}, {3, 0}, {0, 4}};
    // 1/alpha = 2.6 > circumradius: all three edges
    REQUIRE(alpha_shape_reference(tri, 1.0 / 2.6).edges.size() == 3);
    // 1/alpha below half the minimum pairwise distance: nothing survives
    REQUIRE(alpha_shape_reference(tri, 1.0).edges.empty());
    REQUIRE_THROWS_AS(alpha_shape_reference(tri, 0.0), std::invalid_argument);
}

TEST_CASE("hausdorff basics and brute-force agreement") {
    REQUIRE(hausdorff({{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}) == 0.0);
    REQUIRE(hausdorff({{0, 0}}, {{3, 4}}) == Approx(5.0));
    REQUIRE_THROWS_AS(hausdorff({}, {{1, 1}}), std::invalid_argument);

    Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const PointSet a = random_points(rng, 1 + static_cast<int>(rng.below(20)));
        const PointSet b = random_points(rng, 1 + static_cast<int>(rng.below(20)));
        REQUIRE(hausdorff(a, b) == Approx(oracles::brute_hausdorff(a, b)).margin(1e-12));
    }
}

TEST_CASE("point-segment distance and polygon raster fill") {
    const Segment s{{0, 0}, {10, 0}};
    REQUIRE(point_segment_distance({5, 3}, s) == Approx(3.0));
    REQUIRE(point_segment_distance({-4, 3}, s) == Approx(5.0));

    const Polygon rect{{{2, 2}, {6, 2}, {6, 5}, {2, 5}}};
    const auto mask = rasterize_filled(rect, 10, 10);
    std::int64_t count = 0;
    for (const auto c : mask.data()) count += c;
    REQUIRE(count == 5 * 4);  // inclusive bounds: x 2..6, y 2..5
    REQUIRE(mask.at(2, 2) == 1);
    REQUIRE(mask.at(6, 5) == 1);
    REQUIRE(mask.at(7, 3) == 0);
    REQUIRE(mask.at(1, 3) == 0);
}
