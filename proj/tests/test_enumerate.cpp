#include <set>

#include "doctest.h"
#include "gridresolve/characterize.hpp"
#include "gridresolve/enumerate.hpp"
#include "gridresolve/errors.hpp"
#include "oracle.hpp"

using namespace gridresolve;

TEST_CASE("3x3 catalog: histogram fixture and oracle agreement") {
    const Grid g(3, 3);
    const auto cat = enumerate_minimals(g, 4, EnumerationMode::PureOracle);
    CHECK(cat.histogram == std::map<int, std::size_t>{{2, 4}, {3, 12}, {4, 8}});
    CHECK(cat.histogram.rbegin()->first == 4);

    const oracle::GridOracle o(3, 3);
    std::vector<VertexSet> expected;
    for (int k = 2; k <= 4; ++k) {
        for (const auto& ids : o.minimals_of_size(k)) expected.push_back(o.to_set(ids));
    }
    std::sort(expected.begin(), expected.end());
    CHECK(cat.minimals == expected);
}

TEST_CASE("catalogs match the oracle size by size on 4x4") {
    const Grid g(4, 4);
    const oracle::GridOracle o(4, 4);
    const auto cat = enumerate_minimals(g, 5, EnumerationMode::PureOracle);
    for (int k = 2; k <= 5; ++k) {
        std::vector<VertexSet> want;
        for (const auto& ids : o.minimals_of_size(k)) want.push_back(o.to_set(ids));
        std::sort(want.begin(), want.end());
        std::vector<VertexSet> got;
        std::copy_if(cat.minimals.begin(), cat.minimals.end(), std::back_inserter(got),
                     [&](const VertexSet& s) { return static_cast<int>(s.size()) == k; });
        CHECK_MESSAGE(got == want, "k=", k);
    }
}

TEST_CASE("parallel and serial kernels produce identical catalogs") {
    for (auto [w, h, k] : {std::tuple{3, 3, 6}, {3, 5, 6}, {4, 4, 8}, {4, 5, 6}}) {
        const Grid g(w, h);
        for (auto mode : {EnumerationMode::PureOracle, EnumerationMode::TheoremPruned}) {
            const auto par = enumerate_minimals(g, k, mode);
            const auto ser = reference::enumerate_minimals(g, k, mode);
            CHECK(par.minimals == ser.minimals);
            CHECK(par.histogram == ser.histogram);
        }
    }
}

TEST_CASE("pruned and pure modes agree") {
    for (auto [w, h, k] : {std::tuple{3, 3, 6}, {3, 4, 6}, {4, 3, 6}, {4, 4, 8}, {3, 6, 6}}) {
        const Grid g(w, h);
        CHECK(enumerate_minimals(g, k, EnumerationMode::PureOracle).minimals ==
              enumerate_minimals(g, k, EnumerationMode::TheoremPruned).minimals);
    }
}

TEST_CASE("catalog invariants on 4x4") {
    const Grid g(4, 4);
    const auto cat = enumerate_minimals(g, 8, EnumerationMode::PureOracle);
    CHECK(std::is_sorted(cat.minimals.begin(), cat.minimals.end()));
    CHECK(std::adjacent_find(cat.minimals.begin(), cat.minimals.end()) == cat.minimals.end());

    std::size_t total = 0;
    for (const auto& [k, c] : cat.histogram) {
        CHECK(c > 0);
        total += c;
    }
    CHECK(total == cat.minimals.size());

    const std::set<VertexSet> members(cat.minimals.begin(), cat.minimals.end());
    for (const auto& s : cat.minimals) {
        CHECK(is_minimal(g, s));
        CHECK(no_three_collinear(s));
        CHECK(has_opposite_side_pair(g, s));
        if (s.size() >= 3) CHECK(count_corners(g, s) <= 1);
        CHECK(static_cast<int>(s.size()) <= max_minimal_cardinality(g));
        for (Symmetry sym : g.symmetries()) CHECK(members.count(apply_symmetry(g, sym, s)) == 1);
    }
    for (const auto& a : cat.minimals) {
        for (const auto& b : cat.minimals) {
            if (!(a == b)) CHECK_FALSE(a.is_subset_of(b));
        }
    }
}

TEST_CASE("budget and argument checks") {
    CHECK_THROWS_AS(enumerate_minimals(Grid(3, 3), 1, EnumerationMode::PureOracle), InputError);
    try {
        enumerate_minimals(Grid(9, 9), 18, EnumerationMode::PureOracle);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(e.required() == subset_count(81, 2, 18));
        CHECK(e.budget() == kDefaultBudget);
    }
    CHECK_THROWS_AS(enumerate_minimals(Grid(6, 6), 10, EnumerationMode::TheoremPruned, {1000}), ResourceError);
    CHECK_THROWS_AS(reference::enumerate_minimals(Grid(6, 6), 10, EnumerationMode::TheoremPruned, {1000}),
                    ResourceError);
    // k_max above the vertex count is clamped.
    CHECK(enumerate_minimals(Grid(2, 2), 10, EnumerationMode::PureOracle).k_max == 4);
}

TEST_CASE("subset_count") {
    CHECK(subset_count(9, 2, 4) == 36 + 84 + 126);
    CHECK(subset_count(5, 0, 5) == 32);
    CHECK(subset_count(5, 3, 9) == 10 + 5 + 1);
    CHECK(subset_count(200, 0, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("find_special_minimal examples") {
    CHECK(find_special_minimal(Grid(3, 3), 2, [](const VertexSet&) { return true; }) ==
          VertexSet{{0, 0}, {0, 2}});
    CHECK_FALSE(find_special_minimal(Grid(3, 3), 5, [](const VertexSet&) { return true; }));
    const auto special = find_special_minimal(Grid(5, 5), 4, [](const VertexSet& s) { return no_two_collinear(s); });
    REQUIRE(special);
    CHECK(no_two_collinear(*special));
    CHECK(is_minimal(Grid(5, 5), *special));
}

TEST_CASE("certify_bound on small grids") {
    CHECK(certify_bound(Grid(3, 3)));
    CHECK(certify_bound(Grid(3, 4)));
    CHECK(certify_bound(Grid(4, 4)));
    CHECK_THROWS_AS(certify_bound(Grid(2, 4)), InputError);
}
