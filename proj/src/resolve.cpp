#include "gridresolve/resolve.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "gridresolve/errors.hpp"

namespace gridresolve {

DistanceSignature distance_signature(const Grid& g, const VertexSet& S, const Vertex& v) {
    if (S.empty()) throw InputError("distance_signature: landmark set is empty");
    S.require_within(g);
    g.require_contains(v);
    DistanceSignature sig;
    sig.reserve(S.size());
    for (const auto& l : S) sig.push_back(manhattan(l, v));
    return sig;
}

bool is_resolving(const Grid& g, const VertexSet& S) {
    S.require_within(g);
    ResolvingTester tester(g);
    auto idx = S.indices(g);
    return tester.resolving(idx);
}

std::vector<UnresolvedPair> unresolved_pairs(const Grid& g, const VertexSet& S) {
    S.require_within(g);
    std::map<DistanceSignature, std::vector<Vertex>> buckets;
    for (const auto& v : g.vertices()) {
        DistanceSignature sig;
        sig.reserve(S.size());
        for (const auto& l : S) sig.push_back(manhattan(l, v));
        buckets[sig].push_back(v);
    }
    std::vector<UnresolvedPair> out;
    for (const auto& [sig, members] : buckets) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) out.push_back({members[i], members[j]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal(const Grid& g, const VertexSet& S) {
    S.require_within(g);
    ResolvingTester tester(g);
    auto idx = S.indices(g);
    return tester.minimal(idx);
}

bool has_locally_resolved_neighbourhood(const Grid& g, const VertexSet& S, const Vertex& v) {
    S.require_within(g);
    g.require_contains(v);
    const auto nbrs = g.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            bool resolved = false;
            for (const auto& l : S) {
                if (manhattan(l, nbrs[i]) != manhattan(l, nbrs[j])) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
    }
    return true;
}

bool all_locally_resolved(const Grid& g, const VertexSet& S) {
    S.require_within(g);
    for (const auto& v : g.vertices()) {
        if (!has_locally_resolved_neighbourhood(g, S, v)) return false;
    }
    return true;
}

ResolvingTester::ResolvingTester(const Grid& g)
    : grid_(g), span_(g.width() + g.height() - 1) {
    const auto n = static_cast<std::size_t>(g.size());
    xs_.resize(n);
    ys_.resize(n);
    for (int i = 0; i < g.size(); ++i) {
        auto v = g.vertex(i);
        xs_[static_cast<std::size_t>(i)] = v.x;
        ys_[static_cast<std::size_t>(i)] = v.y;
    }
    classes_.resize(n);
    stamp_.assign(n * static_cast<std::size_t>(span_), 0);
    renumber_.resize(stamp_.size());
}

bool ResolvingTester::resolving(std::span<const int> landmarks) {
    const int n = grid_.size();
    if (landmarks.empty()) return n < 2;
    std::fill(classes_.begin(), classes_.end(), 0u);
    std::uint32_t count = 1;
    for (int l : landmarks) {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0u);
            epoch_ = 1;
        }
        const int lx = xs_[static_cast<std::size_t>(l)];
        const int ly = ys_[static_cast<std::size_t>(l)];
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            const int d = std::abs(xs_[uv] - lx) + std::abs(ys_[uv] - ly);
            const std::size_t key = static_cast<std::size_t>(classes_[uv]) * static_cast<std::size_t>(span_) +
                                    static_cast<std::size_t>(d);
            if (stamp_[key] != epoch_) {
                stamp_[key] = epoch_;
                renumber_[key] = next++;
            }
            classes_[uv] = renumber_[key];
        }
        count = next;
        if (count == static_cast<std::uint32_t>(n)) return true;
    }
    return count == static_cast<std::uint32_t>(n);
}

bool ResolvingTester::minimal(std::span<const int> landmarks) {
    if (!resolving(landmarks)) return false;
    for (std::size_t skip = 0; skip < landmarks.size(); ++skip) {
        scratch_.clear();
        for (std::size_t i = 0; i < landmarks.size(); ++i) {
            if (i != skip) scratch_.push_back(landmarks[i]);
        }
        if (resolving(scratch_)) return false;
    }
    return true;
}

}  // namespace gridresolve
