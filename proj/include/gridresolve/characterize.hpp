#pragma once

// Closed-form characterisations of minimal resolving sets on grids and the
// staircase constructions built from them.
//
// Every predicate here that takes a Grid requires min(width, height) >= 3
// and throws InputError otherwise.

#include <optional>
#include <vector>

#include "gridresolve/grid.hpp"
#include "gridresolve/resolve.hpp"
#include "gridresolve/vertex_set.hpp"

namespace gridresolve {

/// Which local configuration gives a vertex a locally resolved neighbourhood.
enum class LocalCase {
    CornerOppositePair,
    SideCase1,
    SideCase2,
    InteriorCase1,
    InteriorCase2,
    InteriorCase3,
    NotLocallyResolved,
};

const char* to_string(LocalCase c);

int count_corners(const Grid& g, const VertexSet& S);
/// Some two members lie on opposite sides of the grid.
bool has_opposite_side_pair(const Grid& g, const VertexSet& S);
/// At most two members per row and per column.
bool no_three_collinear(const VertexSet& S);
/// No two members share a row or a column.
bool no_two_collinear(const VertexSet& S);

/// Exactly two corners sharing a side.
bool is_two_minimal(const Grid& g, const VertexSet& S);
/// The four adjacent-corner pairs, sorted.
std::vector<VertexSet> two_minimals(const Grid& g);

/// Requires |S| == 3. True iff (i) at most one corner, (ii) an opposite-side pair,
/// and (iii) two members share a line and the third lies off that line within the
/// closed coordinate range the pair spans along it.
bool is_three_minimal(const Grid& g, const VertexSet& S);

/// If every landmark other than `origin` sits in one open quadrant of origin, or
/// origin is interior and the landmarks sit in two opposite open quadrants plus the
/// boundary half-axes of one of them, returns the canonically smallest neighbour pair
/// of origin that S and origin leave unresolved. Returns nothing otherwise.
std::optional<UnresolvedPair> quadrant_unresolved_witness(const Grid& g, const VertexSet& S,
                                                          const Vertex& origin);

LocalCase classify_local_case(const Grid& g, const VertexSet& S, const Vertex& v);

/// Sufficient condition for minimality of |S| > 3 sets: at most one corner, exactly
/// one opposite-side pair (u, v) not on a common line, and a minimal line segment
/// path between them (horizontal when u, v are on the S/N sides, vertical otherwise).
/// A false result says nothing about minimality.
bool is_segment_class_minimal(const Grid& g, const VertexSet& S);

/// 2 * min(width, height) - 2
int max_minimal_cardinality(const Grid& g);

/// Unit down/right staircase from the NW corner (after orienting the short side
/// horizontally) plus the left neighbour of the SE corner; 2n - 2 vertices.
VertexSet construct_staircase_max(const Grid& g);

/// A k-minimal built from the endpoints and turn vertices of a monotone staircase.
/// Throws InputError unless 2 <= k <= 2n - 2, and ConstructionError when no
/// staircase candidate of cardinality k verifies as minimal.
VertexSet construct_k_minimal(const Grid& g, int k);

}  // namespace gridresolve
