#include "gridresolve/segments.hpp"

#include <algorithm>
#include <map>

#include "gridresolve/errors.hpp"

namespace gridresolve {

namespace {

void require_member(const VertexSet& S, const Vertex& v, const char* what) {
    if (!S.contains(v)) {
        throw InputError(std::string(what) + ": endpoint " + to_string(v) + " is not a landmark");
    }
}

// Monotone search in the bounding box of u and v. Horizontal steps must stay
// inside one row segment; vertical steps must run along a column covered by
// some segment.
SegmentPathCertificate search(const std::vector<HorizontalSegment>& segs, const Vertex& u,
                              const Vertex& v) {
    std::map<int, const HorizontalSegment*> by_row;
    for (const auto& s : segs) by_row[s.y] = &s;
    auto column_open = [&](int x) {
        return std::any_of(segs.begin(), segs.end(), [x](const auto& s) { return s.covers(x); });
    };
    auto row_step_open = [&](int y, int x0, int x1) {
        auto it = by_row.find(y);
        return it != by_row.end() && it->second->covers(x0) && it->second->covers(x1);
    };

    const int sx = (v.x > u.x) - (v.x < u.x);
    const int sy = (v.y > u.y) - (v.y < u.y);
    const int nx = std::abs(v.x - u.x) + 1;
    const int ny = std::abs(v.y - u.y) + 1;
    // came[i][j]: 0 unreachable, 1 start, 2 from a horizontal step, 3 from a vertical step.
    std::vector<char> came(static_cast<std::size_t>(nx * ny), 0);
    auto at = [&](int i, int j) -> char& { return came[static_cast<std::size_t>(i * ny + j)]; };
    at(0, 0) = 1;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            if (i == 0 && j == 0) continue;
            const int x = u.x + sx * i;
            const int y = u.y + sy * j;
            if (i > 0 && at(i - 1, j) && row_step_open(y, x - sx, x)) {
                at(i, j) = 2;
            } else if (j > 0 && at(i, j - 1) && column_open(x)) {
                at(i, j) = 3;
            }
        }
    }
    SegmentPathCertificate cert;
    if (!at(nx - 1, ny - 1)) return cert;
    cert.exists = true;
    std::vector<Vertex> path;
    int i = nx - 1;
    int j = ny - 1;
    while (true) {
        path.push_back({u.x + sx * i, u.y + sy * j});
        const char c = at(i, j);
        if (c == 1) break;
        if (c == 2) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(path.begin(), path.end());
    cert.witness = std::move(path);
    return cert;
}

}  // namespace

std::vector<HorizontalSegment> horizontal_segments(const VertexSet& S) {
    std::map<int, HorizontalSegment> rows;
    for (const auto& v : S) {
        auto [it, inserted] = rows.try_emplace(v.y, HorizontalSegment{v.y, v.x, v.x});
        if (!inserted) {
            it->second.x_lo = std::min(it->second.x_lo, v.x);
            it->second.x_hi = std::max(it->second.x_hi, v.x);
        }
    }
    std::vector<HorizontalSegment> out;
    out.reserve(rows.size());
    for (const auto& [y, seg] : rows) out.push_back(seg);
    return out;
}

SegmentPathCertificate horizontal_path_exists(const Grid& g, const VertexSet& S, const Vertex& u,
                                              const Vertex& v) {
    S.require_within(g);
    require_member(S, u, "horizontal_path_exists");
    require_member(S, v, "horizontal_path_exists");
    return search(horizontal_segments(S), u, v);
}

SegmentPathCertificate vertical_path_exists(const Grid& g, const VertexSet& S, const Vertex& u,
                                            const Vertex& v) {
    auto cert = horizontal_path_exists(g.transposed(), transpose(S), {u.y, u.x}, {v.y, v.x});
    if (cert.witness) {
        for (auto& w : *cert.witness) std::swap(w.x, w.y);
    }
    return cert;
}

bool is_minimal_segment_path(const Grid& g, const VertexSet& S, const Vertex& u, const Vertex& v) {
    if (!horizontal_path_exists(g, S, u, v).exists) return false;
    for (const auto& w : S) {
        if (w == u || w == v) continue;
        if (search(horizontal_segments(S.without(w)), u, v).exists) return false;
    }
    return true;
}

bool is_minimal_vertical_segment_path(const Grid& g, const VertexSet& S, const Vertex& u,
                                      const Vertex& v) {
    return is_minimal_segment_path(g.transposed(), transpose(S), {u.y, u.x}, {v.y, v.x});
}

std::vector<int> check_segment_conditions(const Grid& g, const VertexSet& S, const Vertex& u,
                                          const Vertex& v) {
    S.require_within(g);
    require_member(S, u, "check_segment_conditions");
    require_member(S, v, "check_segment_conditions");
    if (u == v) throw InputError("check_segment_conditions: u and v must differ");

    VertexSet set = S;
    Vertex a = u;
    Vertex b = v;
    auto flip = [&](Symmetry s) {
        set = apply_symmetry(g, s, set);
        a = apply_symmetry(g, s, a);
        b = apply_symmetry(g, s, b);
    };
    if (a.x > b.x) flip(Symmetry::FlipHorizontal);
    if (a.y < b.y) flip(Symmetry::FlipVertical);

    const auto segs = horizontal_segments(set);
    const int p = a.x;
    const int q = b.x;
    std::vector<int> violated;

    std::map<int, int> per_row;
    for (const auto& w : set) ++per_row[w.y];
    if (std::any_of(per_row.begin(), per_row.end(), [](const auto& kv) { return kv.second > 2; })) {
        violated.push_back(1);
    }

    bool triple = false;
    for (std::size_t i = 0; i < segs.size() && !triple; ++i) {
        for (std::size_t j = i + 1; j < segs.size() && !triple; ++j) {
            for (std::size_t k = j + 1; k < segs.size() && !triple; ++k) {
                const int lo = std::max({segs[i].x_lo, segs[j].x_lo, segs[k].x_lo});
                const int hi = std::min({segs[i].x_hi, segs[j].x_hi, segs[k].x_hi});
                triple = lo <= hi;
            }
        }
    }
    if (triple) violated.push_back(2);

    // A segment holding u or v cannot be dropped, so only the others count as
    // redundant when nested.
    bool nested = false;
    for (std::size_t i = 0; i < segs.size() && !nested; ++i) {
        if (segs[i].y == a.y || segs[i].y == b.y) continue;
        for (std::size_t j = 0; j < segs.size() && !nested; ++j) {
            nested = i != j && segs[i].x_lo >= segs[j].x_lo && segs[i].x_hi <= segs[j].x_hi;
        }
    }
    if (nested) violated.push_back(3);

    if (std::any_of(segs.begin(), segs.end(), [p](const auto& s) { return s.x_hi < p; })) {
        violated.push_back(4);
    }
    if (std::any_of(segs.begin(), segs.end(), [q](const auto& s) { return s.x_lo > q; })) {
        violated.push_back(5);
    }

    bool staircase_broken = false;
    for (const auto& hi_seg : segs) {
        if (hi_seg.y == a.y || hi_seg.y == b.y) continue;
        for (const auto& lo_seg : segs) {
            if (lo_seg.y == a.y || lo_seg.y == b.y || lo_seg.y >= hi_seg.y) continue;
            if (lo_seg.x_hi <= hi_seg.x_hi) staircase_broken = true;
        }
    }
    if (staircase_broken) violated.push_back(6);
    return violated;
}

}  // namespace gridresolve
