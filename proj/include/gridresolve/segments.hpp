#pragma once

// Line segment paths: shortest paths between two landmarks that only use the
// row segments spanned by landmarks and the columns crossing those segments.
// Vertical variants run the horizontal machinery on the transposed grid.

#include <optional>
#include <vector>

#include "gridresolve/grid.hpp"
#include "gridresolve/vertex_set.hpp"

namespace gridresolve {

/// Landmarks on row y span columns [x_lo, x_hi]. A lone landmark has x_lo == x_hi.
struct HorizontalSegment {
    int y = 0;
    int x_lo = 0;
    int x_hi = 0;

    bool covers(int x) const noexcept { return x >= x_lo && x <= x_hi; }
    int length() const noexcept { return x_hi - x_lo + 1; }

    friend constexpr auto operator<=>(const HorizontalSegment&, const HorizontalSegment&) = default;
};

struct SegmentPathCertificate {
    bool exists = false;
    /// dist(u, v) + 1 vertices from u to v when exists.
    std::optional<std::vector<Vertex>> witness;
};

/// One segment per row holding a landmark, ordered by y.
std::vector<HorizontalSegment> horizontal_segments(const VertexSet& S);

/// Throws InputError unless u and v are in S.
SegmentPathCertificate horizontal_path_exists(const Grid& g, const VertexSet& S, const Vertex& u,
                                              const Vertex& v);
SegmentPathCertificate vertical_path_exists(const Grid& g, const VertexSet& S, const Vertex& u,
                                            const Vertex& v);

/// The path exists for S but not for S minus any single member. Removing u or v
/// removes an endpoint, so those removals never leave a path.
bool is_minimal_segment_path(const Grid& g, const VertexSet& S, const Vertex& u, const Vertex& v);
bool is_minimal_vertical_segment_path(const Grid& g, const VertexSet& S, const Vertex& u,
                                      const Vertex& v);

/// Necessary conditions (1)..(6) for a minimal horizontal segment path between u
/// and v, evaluated after flipping the grid so u is above and left of v. Returns
/// the violated condition numbers in ascending order:
///   1  at most two landmarks per row
///   2  no three segments share a column
///   3  no segment's columns are contained in another's, unless it holds u or v
///   4  every segment reaches column p = min(u.x, v.x)
///   5  every segment starts at or before column q = max(u.x, v.x)
///   6  among segments holding neither u nor v, a lower segment ends strictly
///      further right than a higher one
std::vector<int> check_segment_conditions(const Grid& g, const VertexSet& S, const Vertex& u,
                                          const Vertex& v);

}  // namespace gridresolve
