#pragma once

// Ground-truth resolution predicates.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gridresolve/grid.hpp"
#include "gridresolve/vertex_set.hpp"

namespace gridresolve {

/// Distances from one vertex to each landmark, in landmark order.
using DistanceSignature = std::vector<int>;

/// Two distinct vertices with equal signatures, u < v canonically.
struct UnresolvedPair {
    Vertex u;
    Vertex v;

    friend constexpr auto operator<=>(const UnresolvedPair&, const UnresolvedPair&) = default;
};

/// Throws InputError when S is empty or any vertex is outside g.
DistanceSignature distance_signature(const Grid& g, const VertexSet& S, const Vertex& v);

bool is_resolving(const Grid& g, const VertexSet& S);

/// All pairs with equal signatures, sorted. Empty iff S resolves g.
std::vector<UnresolvedPair> unresolved_pairs(const Grid& g, const VertexSet& S);

/// Resolving, and no single removal keeps it resolving.
bool is_minimal(const Grid& g, const VertexSet& S);

/// No two distinct neighbours of v share a signature under S.
bool has_locally_resolved_neighbourhood(const Grid& g, const VertexSet& S, const Vertex& v);

bool all_locally_resolved(const Grid& g, const VertexSet& S);

/// Index-based resolution test with reusable scratch space, for the hot loops of
/// enumeration and search. Not thread-safe; use one instance per thread.
///
/// Signatures are refined one landmark at a time: each vertex carries a class id,
/// and the pair (class id, distance) is renumbered through a table indexed by
/// class * (width + height - 1) + distance. The set resolves the grid exactly when
/// the class count reaches width * height.
class ResolvingTester {
public:
    explicit ResolvingTester(const Grid& g);

    const Grid& grid() const noexcept { return grid_; }

    bool resolving(std::span<const int> landmarks);
    bool minimal(std::span<const int> landmarks);

private:
    Grid grid_;
    int span_;  // width + height - 1, one past the largest distance
    std::vector<int> xs_;
    std::vector<int> ys_;
    std::vector<std::uint32_t> classes_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> renumber_;
    std::vector<int> scratch_;
    std::uint32_t epoch_ = 0;
};

}  // namespace gridresolve
