#include <map>
#include <set>

#include "doctest.h"
#include "gridresolve/errors.hpp"
#include "gridresolve/grid.hpp"
#include "oracle.hpp"

using namespace gridresolve;

TEST_CASE("grid rejects dimensions below two") {
    CHECK_THROWS_AS(Grid(1, 5), InputError);
    CHECK_THROWS_AS(Grid(4, 0), InputError);
    CHECK_NOTHROW(Grid(2, 2));
    CHECK_THROWS_AS(Grid(2, 5).require_characterizable(), InputError);
    CHECK_NOTHROW(Grid(3, 5).require_characterizable());
}

TEST_CASE("canonical index follows lexicographic vertex order") {
    const Grid g(4, 3);
    std::vector<Vertex> vs = g.vertices();
    CHECK(std::is_sorted(vs.begin(), vs.end()));
    for (int i = 0; i < g.size(); ++i) {
        CHECK(g.index(g.vertex(i)) == i);
        CHECK(vs[static_cast<std::size_t>(i)] == g.vertex(i));
    }
}

TEST_CASE("dist examples") {
    const Grid g33(3, 3);
    CHECK(dist(g33, {0, 0}, {0, 0}) == 0);
    CHECK(dist(g33, {0, 0}, {2, 2}) == 4);
    CHECK(dist(Grid(4, 6), {1, 2}, {3, 5}) == 5);
    CHECK_THROWS_AS(dist(g33, {0, 0}, {3, 0}), InputError);
    CHECK_THROWS_AS(dist(g33, {-1, 0}, {0, 0}), InputError);
}

TEST_CASE("dist matches breadth-first search and is a metric up to 5x5") {
    for (int w = 2; w <= 5; ++w) {
        for (int h = 2; h <= 5; ++h) {
            const Grid g(w, h);
            const oracle::GridOracle o(w, h);
            for (int a = 0; a < g.size(); ++a) {
                for (int b = 0; b < g.size(); ++b) {
                    const Vertex va = g.vertex(a);
                    const Vertex vb = g.vertex(b);
                    const int d = dist(g, va, vb);
                    REQUIRE(d == o.d(o.id(va.x, va.y), o.id(vb.x, vb.y)));
                    CHECK(d == dist(g, vb, va));
                    CHECK((d == 0) == (a == b));
                    for (int c = 0; c < g.size(); ++c) {
                        CHECK(d <= dist(g, va, g.vertex(c)) + dist(g, g.vertex(c), vb));
                    }
                }
            }
        }
    }
}

TEST_CASE("classify_vertex examples and counts") {
    CHECK(classify_vertex(Grid(3, 3), {0, 0}) == VertexClass::Corner);
    CHECK(classify_vertex(Grid(3, 3), {1, 0}) == VertexClass::Side);
    CHECK(classify_vertex(Grid(5, 5), {2, 3}) == VertexClass::Interior);
    CHECK_THROWS_AS(classify_vertex(Grid(3, 3), {3, 3}), InputError);

    for (int w = 3; w <= 7; ++w) {
        for (int h = 3; h <= 7; ++h) {
            const Grid g(w, h);
            std::map<VertexClass, int> count;
            for (const auto& v : g.vertices()) ++count[classify_vertex(g, v)];
            CHECK(count[VertexClass::Corner] == 4);
            CHECK(count[VertexClass::Side] == 2 * (w - 2) + 2 * (h - 2));
            CHECK(count[VertexClass::Interior] == (w - 2) * (h - 2));
        }
    }
}

TEST_CASE("region_of examples") {
    const Grid g(5, 5);
    CHECK(region_of(g, {2, 2}, {2, 2}) == Region::Origin);
    CHECK(region_of(g, {2, 2}, {4, 2}) == Region::AxisEast);
    CHECK(region_of(g, {2, 2}, {1, 4}) == Region::QuadNW);
    CHECK(region_of(g, {2, 2}, {2, 0}) == Region::AxisSouth);
    CHECK(region_of(g, {2, 2}, {0, 2}) == Region::AxisWest);
    CHECK(region_of(g, {2, 2}, {3, 4}) == Region::QuadNE);
    CHECK(region_of(g, {2, 2}, {0, 0}) == Region::QuadSW);
    CHECK(region_of(g, {2, 2}, {4, 1}) == Region::QuadSE);
}

TEST_CASE("region_of partitions the grid by sign pattern") {
    for (int w = 3; w <= 5; ++w) {
        for (int h = 3; h <= 5; ++h) {
            const Grid g(w, h);
            for (const auto& o : g.vertices()) {
                std::map<Region, int> count;
                for (const auto& v : g.vertices()) {
                    const Region r = region_of(g, o, v);
                    ++count[r];
                    const int sx = (v.x > o.x) - (v.x < o.x);
                    const int sy = (v.y > o.y) - (v.y < o.y);
                    CHECK((r == Region::Origin) == (sx == 0 && sy == 0));
                    CHECK(is_axis(r) == ((sx == 0) != (sy == 0)));
                    CHECK(is_quadrant(r) == (sx != 0 && sy != 0));
                }
                int total = 0;
                for (const auto& [r, c] : count) total += c;
                CHECK(total == g.size());
                CHECK(count[Region::Origin] == 1);
            }
        }
    }
}

TEST_CASE("quadrant relations") {
    const Region quads[] = {Region::QuadNE, Region::QuadNW, Region::QuadSW, Region::QuadSE};
    CHECK(quadrants_opposite(Region::QuadNE, Region::QuadSW));
    CHECK(quadrants_opposite(Region::QuadNW, Region::QuadSE));
    for (Region a : quads) {
        CHECK(opposite_quadrant(opposite_quadrant(a)) == a);
        CHECK(quadrants_opposite(a, opposite_quadrant(a)));
        int adjacent = 0;
        for (Region b : quads) {
            if (a == b) continue;
            CHECK(quadrants_opposite(a, b) != quadrants_adjacent(a, b));
            adjacent += quadrants_adjacent(a, b);
        }
        CHECK(adjacent == 2);
    }
    CHECK(axis_bounds_quadrant(Region::AxisNorth, Region::QuadNE));
    CHECK(axis_bounds_quadrant(Region::AxisEast, Region::QuadNE));
    CHECK_FALSE(axis_bounds_quadrant(Region::AxisSouth, Region::QuadNE));
    CHECK_FALSE(axis_bounds_quadrant(Region::AxisWest, Region::QuadNE));
}

TEST_CASE("resolves examples") {
    const Grid g(3, 3);
    CHECK_FALSE(resolves(g, {0, 0}, {1, 0}, {0, 1}));
    CHECK(resolves(g, {0, 0}, {2, 2}, {1, 1}));
    CHECK_FALSE(resolves(g, {1, 1}, {0, 1}, {1, 0}));
    CHECK_THROWS_AS(resolves(g, {0, 0}, {1, 1}, {1, 1}), InputError);
}

TEST_CASE("neighbours come in E, N, W, S order") {
    const Grid g(3, 3);
    CHECK(g.neighbours({1, 1}) == std::vector<Vertex>{{2, 1}, {1, 2}, {0, 1}, {1, 0}});
    CHECK(g.neighbours({0, 0}) == std::vector<Vertex>{{1, 0}, {0, 1}});
}

TEST_CASE("symmetries preserve distance and permute vertices") {
    for (int w = 2; w <= 5; ++w) {
        for (int h = 2; h <= 5; ++h) {
            const Grid g(w, h);
            const auto syms = g.symmetries();
            CHECK(syms.size() == (w == h ? 8u : 4u));
            for (Symmetry s : syms) {
                std::set<Vertex> image;
                for (const auto& a : g.vertices()) {
                    const Vertex sa = apply_symmetry(g, s, a);
                    REQUIRE(g.contains(sa));
                    image.insert(sa);
                    for (const auto& b : g.vertices()) {
                        CHECK(dist(g, sa, apply_symmetry(g, s, b)) == dist(g, a, b));
                    }
                }
                CHECK(image.size() == static_cast<std::size_t>(g.size()));
            }
        }
    }
}

TEST_CASE("square-only symmetries are rejected on rectangles") {
    const Grid g(3, 4);
    for (Symmetry s : {Symmetry::Rotate90, Symmetry::Rotate270, Symmetry::Transpose, Symmetry::AntiTranspose}) {
        CHECK_FALSE(g.allows(s));
        CHECK_THROWS_AS(apply_symmetry(g, s, Vertex{0, 0}), InputError);
    }
}

TEST_CASE("named symmetries map corners as expected") {
    const Grid g(3, 3);
    CHECK(apply_symmetry(g, Symmetry::FlipHorizontal, Vertex{0, 2}) == Vertex{2, 2});
    CHECK(apply_symmetry(g, Symmetry::FlipVertical, Vertex{0, 2}) == Vertex{0, 0});
    CHECK(apply_symmetry(g, Symmetry::Rotate180, Vertex{1, 1}) == Vertex{1, 1});
    // Counter-clockwise quarter turn sends the SE corner to the NE corner.
    CHECK(apply_symmetry(g, Symmetry::Rotate90, Vertex{2, 0}) == Vertex{2, 2});
    CHECK(apply_symmetry(g, Symmetry::Rotate270, Vertex{2, 2}) == Vertex{2, 0});
    CHECK(apply_symmetry(g, Symmetry::Transpose, Vertex{2, 0}) == Vertex{0, 2});
    CHECK(apply_symmetry(g, Symmetry::AntiTranspose, Vertex{0, 0}) == Vertex{2, 2});
}

TEST_CASE("opposite-side helpers") {
    const Grid g(4, 5);
    CHECK(on_opposite_sides(g, {0, 2}, {3, 1}));
    CHECK(on_opposite_sides(g, {1, 0}, {2, 4}));
    CHECK_FALSE(on_opposite_sides(g, {0, 2}, {1, 4}));
    CHECK_FALSE(on_opposite_sides(g, {1, 1}, {2, 4}));
    CHECK(on_opposite_horizontal_sides(g, {1, 0}, {2, 4}));
    CHECK_FALSE(on_opposite_horizontal_sides(g, {0, 2}, {3, 1}));
}
