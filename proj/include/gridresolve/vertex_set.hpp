#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gridresolve/grid.hpp"

namespace gridresolve {

/// Distinct vertices kept in canonical (x, y) lexicographic order, so set
/// equality is sequence equality.
///
/// Sets themselves are ordered shortlex: smaller cardinality first, then
/// lexicographically by element. Catalogs and solver tie-breaks use this order.
class VertexSet {
public:
    VertexSet() = default;
    /// Throws InputError on duplicates.
    VertexSet(std::initializer_list<Vertex> vs);
    /// Sorts; throws InputError on duplicates.
    explicit VertexSet(std::vector<Vertex> vs);

    /// No validation: the caller guarantees sorted, duplicate-free input.
    static VertexSet from_sorted_unique(std::vector<Vertex> vs);

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    const Vertex& operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }
    std::span<const Vertex> elements() const noexcept { return elems_; }

    bool contains(const Vertex& v) const;
    bool is_subset_of(const VertexSet& other) const;
    VertexSet without(const Vertex& v) const;
    VertexSet with(const Vertex& v) const;

    /// Throws InputError if any element lies outside g.
    void require_within(const Grid& g) const;
    /// Canonical indices of the elements, ascending.
    std::vector<int> indices(const Grid& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    std::vector<Vertex> elems_;
};

std::string to_string(const VertexSet& s);

/// Image of S under s, re-sorted. Throws InputError for a square-only symmetry on a
/// non-square grid.
VertexSet apply_symmetry(const Grid& g, Symmetry s, const VertexSet& S);

/// Swap x and y of every element (maps a w x h grid onto its h x w transpose).
VertexSet transpose(const VertexSet& S);

VertexSet from_indices(const Grid& g, std::span<const int> indices);

}  // namespace gridresolve
