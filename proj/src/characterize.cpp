#include "gridresolve/characterize.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "gridresolve/errors.hpp"
#include "gridresolve/segments.hpp"

namespace gridresolve {

const char* to_string(LocalCase c) {
    switch (c) {
        case LocalCase::CornerOppositePair: return "corner-opposite-pair";
        case LocalCase::SideCase1: return "side-case-1";
        case LocalCase::SideCase2: return "side-case-2";
        case LocalCase::InteriorCase1: return "interior-case-1";
        case LocalCase::InteriorCase2: return "interior-case-2";
        case LocalCase::InteriorCase3: return "interior-case-3";
        case LocalCase::NotLocallyResolved: return "not-locally-resolved";
    }
    return "?";
}

int count_corners(const Grid& g, const VertexSet& S) {
    return static_cast<int>(std::count_if(S.begin(), S.end(), [&](const Vertex& v) {
        return classify_vertex(g, v) == VertexClass::Corner;
    }));
}

bool has_opposite_side_pair(const Grid& g, const VertexSet& S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            if (on_opposite_sides(g, S[i], S[j])) return true;
        }
    }
    return false;
}

namespace {

bool max_per_line_at_most(const VertexSet& S, int limit) {
    std::map<int, int> rows;
    std::map<int, int> cols;
    for (const auto& v : S) {
        if (++cols[v.x] > limit || ++rows[v.y] > limit) return false;
    }
    return true;
}

}  // namespace

bool no_three_collinear(const VertexSet& S) { return max_per_line_at_most(S, 2); }

bool no_two_collinear(const VertexSet& S) { return max_per_line_at_most(S, 1); }

bool is_two_minimal(const Grid& g, const VertexSet& S) {
    g.require_characterizable();
    S.require_within(g);
    if (S.size() != 2) return false;
    const auto& a = S[0];
    const auto& b = S[1];
    if (classify_vertex(g, a) != VertexClass::Corner || classify_vertex(g, b) != VertexClass::Corner) {
        return false;
    }
    return a.x == b.x || a.y == b.y;
}

std::vector<VertexSet> two_minimals(const Grid& g) {
    g.require_characterizable();
    const int w = g.width() - 1;
    const int h = g.height() - 1;
    std::vector<VertexSet> out = {
        VertexSet{{0, 0}, {w, 0}},
        VertexSet{{0, 0}, {0, h}},
        VertexSet{{0, h}, {w, h}},
        VertexSet{{w, 0}, {w, h}},
    };
    std::sort(out.begin(), out.end());
    return out;
}

bool is_three_minimal(const Grid& g, const VertexSet& S) {
    g.require_characterizable();
    S.require_within(g);
    if (S.size() != 3) {
        throw InputError("is_three_minimal: expected 3 vertices, got " + std::to_string(S.size()));
    }
    if (count_corners(g, S) > 1) return false;
    if (!has_opposite_side_pair(g, S)) return false;
    for (int i = 0; i < 3; ++i) {
        const Vertex& a = S[static_cast<std::size_t>(i)];
        const Vertex& b = S[static_cast<std::size_t>((i + 1) % 3)];
        const Vertex& c = S[static_cast<std::size_t>((i + 2) % 3)];
        if (a.y == b.y) {
            const auto [lo, hi] = std::minmax(a.x, b.x);
            if (c.x >= lo && c.x <= hi && c.y != a.y) return true;
        }
        if (a.x == b.x) {
            const auto [lo, hi] = std::minmax(a.y, b.y);
            if (c.y >= lo && c.y <= hi && c.x != a.x) return true;
        }
    }
    return false;
}

namespace {

// Landmark regions matching the two quadrant lemmas.
bool matches_quadrant_pattern(const Grid& g, const Vertex& origin, const std::vector<Region>& regions) {
    if (regions.empty()) return false;
    if (is_quadrant(regions.front()) &&
        std::all_of(regions.begin(), regions.end(), [&](Region r) { return r == regions.front(); })) {
        return true;
    }
    if (classify_vertex(g, origin) != VertexClass::Interior) return false;
    for (Region qa : {Region::QuadNE, Region::QuadNW, Region::QuadSW, Region::QuadSE}) {
        const Region qb = opposite_quadrant(qa);
        const bool fits = std::all_of(regions.begin(), regions.end(), [&](Region r) {
            return r == qa || r == qb || axis_bounds_quadrant(r, qa);
        });
        if (fits) return true;
    }
    return false;
}

}  // namespace

std::optional<UnresolvedPair> quadrant_unresolved_witness(const Grid& g, const VertexSet& S,
                                                          const Vertex& origin) {
    g.require_contains(origin);
    S.require_within(g);
    std::vector<Region> regions;
    std::vector<Vertex> landmarks;
    for (const auto& l : S) {
        if (l == origin) continue;
        regions.push_back(region_of(g, origin, l));
        landmarks.push_back(l);
    }
    if (!matches_quadrant_pattern(g, origin, regions)) return std::nullopt;

    // The neighbour pair toward quadrant (dx, dy) is left unresolved by every
    // landmark inside that open quadrant and every landmark in the closed
    // quadrant opposite to it.
    std::optional<UnresolvedPair> best;
    for (int dx : {-1, 1}) {
        for (int dy : {-1, 1}) {
            const Vertex h{origin.x + dx, origin.y};
            const Vertex v{origin.x, origin.y + dy};
            if (!g.contains(h) || !g.contains(v)) continue;
            const bool unresolved = std::all_of(landmarks.begin(), landmarks.end(), [&](const Vertex& l) {
                const int ex = (l.x - origin.x) * dx;
                const int ey = (l.y - origin.y) * dy;
                return (ex > 0 && ey > 0) || (ex <= 0 && ey <= 0);
            });
            if (!unresolved) continue;
            UnresolvedPair pair = h < v ? UnresolvedPair{h, v} : UnresolvedPair{v, h};
            if (!best || pair < *best) best = pair;
        }
    }
    return best;
}

LocalCase classify_local_case(const Grid& g, const VertexSet& S, const Vertex& v) {
    g.require_characterizable();
    if (!has_locally_resolved_neighbourhood(g, S, v)) return LocalCase::NotLocallyResolved;

    const VertexClass cls = classify_vertex(g, v);
    if (cls == VertexClass::Corner) return LocalCase::CornerOppositePair;

    std::vector<Region> occupied;
    for (const auto& l : S) {
        if (l == v) continue;
        const Region r = region_of(g, v, l);
        if (std::find(occupied.begin(), occupied.end(), r) == occupied.end()) occupied.push_back(r);
    }
    auto has = [&](Region r) { return std::find(occupied.begin(), occupied.end(), r) != occupied.end(); };
    std::vector<Region> quads;
    std::vector<Region> axes;
    for (Region r : occupied) (is_quadrant(r) ? quads : axes).push_back(r);

    if (cls == VertexClass::Side) {
        if (quads.size() >= 2) return LocalCase::SideCase1;
        for (Region axis : axes) {
            for (Region other : occupied) {
                if (other == axis) continue;
                if (is_quadrant(other) && !axis_bounds_quadrant(axis, other)) continue;
                return LocalCase::SideCase2;
            }
        }
    } else {
        for (std::size_t i = 0; i < quads.size(); ++i) {
            for (std::size_t j = i + 1; j < quads.size(); ++j) {
                if (quadrants_adjacent(quads[i], quads[j])) return LocalCase::InteriorCase1;
            }
        }
        for (Region q : {Region::QuadNE, Region::QuadNW, Region::QuadSW, Region::QuadSE}) {
            const bool both_axes = std::count_if(axes.begin(), axes.end(), [&](Region a) {
                                       return axis_bounds_quadrant(a, q);
                                   }) == 2;
            if (!both_axes) continue;
            for (Region other : quads) {
                if (quadrants_adjacent(q, other)) return LocalCase::InteriorCase2;
            }
        }
        const std::array<std::pair<Region, Region>, 2> opposite_axes = {
            std::pair{Region::AxisNorth, Region::AxisSouth}, std::pair{Region::AxisEast, Region::AxisWest}};
        for (const auto& [a, b] : opposite_axes) {
            if (!has(a) || !has(b)) continue;
            if (std::any_of(occupied.begin(), occupied.end(), [&](Region r) { return r != a && r != b; })) {
                return LocalCase::InteriorCase3;
            }
        }
    }
    // Local resolution depends only on which regions are occupied, and the
    // tests enumerate every occupancy pattern, so this is unreachable.
    throw std::logic_error("classify_local_case: locally resolved vertex " + to_string(v) +
                           " matches no case");
}

bool is_segment_class_minimal(const Grid& g, const VertexSet& S) {
    g.require_characterizable();
    S.require_within(g);
    if (S.size() <= 3) {
        throw InputError("is_segment_class_minimal: needs more than 3 vertices, got " +
                         std::to_string(S.size()));
    }
    if (count_corners(g, S) > 1) return false;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            if (on_opposite_sides(g, S[i], S[j])) pairs.emplace_back(S[i], S[j]);
        }
    }
    if (pairs.size() != 1) return false;
    const auto [u, v] = pairs.front();
    if (u.x == v.x || u.y == v.y) return false;
    if (on_opposite_horizontal_sides(g, u, v)) return is_minimal_segment_path(g, S, u, v);
    return is_minimal_vertical_segment_path(g, S, u, v);
}

int max_minimal_cardinality(const Grid& g) {
    g.require_characterizable();
    return 2 * g.n() - 2;
}

namespace {

// Builds in a frame whose width is the short side, then maps back.
VertexSet oriented(const Grid& g, std::vector<Vertex> frame_vertices) {
    if (g.width() > g.height()) {
        for (auto& v : frame_vertices) std::swap(v.x, v.y);
    }
    return VertexSet(std::move(frame_vertices));
}

// Endpoints and turn vertices of a staircase that starts at the NW corner,
// alternates unit steps down and right `turns` times, then runs straight to the
// opposite boundary. Frame is n wide and m tall.
std::vector<Vertex> corner_staircase(int n, int m, int turns) {
    std::vector<Vertex> out;
    Vertex cur{0, m - 1};
    out.push_back(cur);
    for (int t = 0; t < turns; ++t) {
        if (t % 2 == 0) {
            --cur.y;
        } else {
            ++cur.x;
        }
        out.push_back(cur);
    }
    if (turns % 2 == 0) {
        cur.y = 0;
    } else {
        cur.x = n - 1;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

VertexSet construct_staircase_max(const Grid& g) {
    g.require_characterizable();
    const int n = g.n();
    const int m = g.m();
    std::vector<Vertex> path;
    Vertex cur{0, m - 1};
    path.push_back(cur);
    for (int i = 1; i < 2 * n - 3; ++i) {
        if (i % 2 == 1) {
            --cur.y;
        } else {
            ++cur.x;
        }
        path.push_back(cur);
    }
    path.push_back({n - 2, 0});
    VertexSet out = oriented(g, std::move(path));
    if (!is_minimal(g, out)) {
        throw ConstructionError("staircase construction on " + to_string(g) + " is not minimal: " +
                                to_string(out));
    }
    return out;
}

VertexSet construct_k_minimal(const Grid& g, int k) {
    g.require_characterizable();
    const int kmax = max_minimal_cardinality(g);
    if (k < 2 || k > kmax) {
        throw InputError("construct_k_minimal: k must lie in [2, " + std::to_string(kmax) + "] on " +
                         to_string(g) + ", got " + std::to_string(k));
    }
    if (k == 2) return two_minimals(g).front();

    const int n = g.n();
    const int m = g.m();
    const int turns = k - 2;
    VertexSet candidate = oriented(g, corner_staircase(n, m, turns));
    if (candidate.size() == static_cast<std::size_t>(k) && is_minimal(g, candidate)) return candidate;
    throw ConstructionError("no staircase " + std::to_string(k) + "-minimal verifies on " + to_string(g) +
                            " (last candidate " + to_string(candidate) + ")");
}

}  // namespace gridresolve
