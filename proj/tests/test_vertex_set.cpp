#include "doctest.h"
#include "gridresolve/errors.hpp"
#include "gridresolve/vertex_set.hpp"

using namespace gridresolve;

TEST_CASE("vertex sets are stored in canonical order") {
    const VertexSet s{{2, 0}, {0, 1}, {0, 0}};
    CHECK(s.size() == 3);
    CHECK(s[0] == Vertex{0, 0});
    CHECK(s[1] == Vertex{0, 1});
    CHECK(s[2] == Vertex{2, 0});
    CHECK(s == VertexSet{{0, 0}, {2, 0}, {0, 1}});
    CHECK(to_string(s) == "(0,0);(0,1);(2,0)");
}

TEST_CASE("duplicates are rejected") {
    CHECK_THROWS_AS((VertexSet{{1, 1}, {1, 1}}), InputError);
    CHECK_THROWS_AS(VertexSet(std::vector<Vertex>{{0, 2}, {1, 0}, {0, 2}}), InputError);
}

TEST_CASE("shortlex ordering: size first, then elements") {
    const VertexSet a{{3, 3}, {3, 4}};
    const VertexSet b{{0, 0}, {0, 1}, {0, 2}};
    const VertexSet c{{0, 0}, {0, 1}, {1, 0}};
    CHECK(a < b);
    CHECK(b < c);
    CHECK(VertexSet{} < a);
}

TEST_CASE("membership and edits") {
    const VertexSet s{{0, 0}, {2, 1}};
    CHECK(s.contains({2, 1}));
    CHECK_FALSE(s.contains({1, 2}));
    CHECK(s.with({1, 0}) == VertexSet{{0, 0}, {1, 0}, {2, 1}});
    CHECK(s.with({0, 0}) == s);
    CHECK(s.without({0, 0}) == VertexSet{{2, 1}});
    CHECK(s.without({5, 5}) == s);
    CHECK(VertexSet{{2, 1}}.is_subset_of(s));
    CHECK_FALSE(s.is_subset_of(VertexSet{{2, 1}}));
    CHECK(VertexSet{}.is_subset_of(s));
}

TEST_CASE("bounds and index conversion") {
    const Grid g(3, 4);
    const VertexSet s{{0, 3}, {2, 0}};
    CHECK_NOTHROW(s.require_within(g));
    CHECK_THROWS_AS((VertexSet{{3, 0}}.require_within(g)), InputError);
    const auto idx = s.indices(g);
    CHECK(idx == std::vector<int>{3, 8});
    CHECK(from_indices(g, idx) == s);
}

TEST_CASE("set symmetry examples") {
    const Grid g(3, 3);
    CHECK(apply_symmetry(g, Symmetry::Identity, VertexSet{{0, 0}, {2, 1}}) == VertexSet{{0, 0}, {2, 1}});
    CHECK(apply_symmetry(g, Symmetry::FlipHorizontal, VertexSet{{0, 0}, {0, 2}}) == VertexSet{{2, 0}, {2, 2}});
    CHECK(apply_symmetry(g, Symmetry::Rotate180, VertexSet{{1, 1}}) == VertexSet{{1, 1}});
    CHECK_THROWS_AS(apply_symmetry(Grid(3, 4), Symmetry::Rotate90, VertexSet{{0, 0}}), InputError);
    CHECK(transpose(VertexSet{{0, 3}, {2, 1}}) == VertexSet{{3, 0}, {1, 2}});
}
