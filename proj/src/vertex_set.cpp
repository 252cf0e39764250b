#include "gridresolve/vertex_set.hpp"

#include <algorithm>

#include "gridresolve/errors.hpp"

namespace gridresolve {

namespace {

void sort_and_check_unique(std::vector<Vertex>& vs) {
    std::sort(vs.begin(), vs.end());
    auto dup = std::adjacent_find(vs.begin(), vs.end());
    if (dup != vs.end()) throw InputError("duplicate vertex " + to_string(*dup) + " in set");
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : elems_(vs) { sort_and_check_unique(elems_); }

VertexSet::VertexSet(std::vector<Vertex> vs) : elems_(std::move(vs)) { sort_and_check_unique(elems_); }

VertexSet VertexSet::from_sorted_unique(std::vector<Vertex> vs) {
    VertexSet s;
    s.elems_ = std::move(vs);
    return s;
}

bool VertexSet::contains(const Vertex& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

VertexSet VertexSet::without(const Vertex& v) const {
    std::vector<Vertex> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) {
        if (e != v) out.push_back(e);
    }
    return from_sorted_unique(std::move(out));
}

VertexSet VertexSet::with(const Vertex& v) const {
    if (contains(v)) return *this;
    std::vector<Vertex> out = elems_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return from_sorted_unique(std::move(out));
}

void VertexSet::require_within(const Grid& g) const {
    for (const auto& v : elems_) g.require_contains(v);
}

std::vector<int> VertexSet::indices(const Grid& g) const {
    std::vector<int> out;
    out.reserve(elems_.size());
    for (const auto& v : elems_) out.push_back(g.index(v));
    return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                                  b.elems_.end());
}

std::string to_string(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ';';
        out += to_string(s[i]);
    }
    return out;
}

VertexSet apply_symmetry(const Grid& g, Symmetry s, const VertexSet& S) {
    std::vector<Vertex> out;
    out.reserve(S.size());
    for (const auto& v : S) out.push_back(apply_symmetry(g, s, v));
    std::sort(out.begin(), out.end());
    return VertexSet::from_sorted_unique(std::move(out));
}

VertexSet transpose(const VertexSet& S) {
    std::vector<Vertex> out;
    out.reserve(S.size());
    for (const auto& v : S) out.push_back({v.y, v.x});
    std::sort(out.begin(), out.end());
    return VertexSet::from_sorted_unique(std::move(out));
}

VertexSet from_indices(const Grid& g, std::span<const int> indices) {
    std::vector<Vertex> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(g.vertex(i));
    std::sort(out.begin(), out.end());
    return VertexSet::from_sorted_unique(std::move(out));
}

}  // namespace gridresolve
