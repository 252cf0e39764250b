#include "gridresolve/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numeric>

#include "gridresolve/errors.hpp"
#include "gridresolve/resolve.hpp"

namespace gridresolve {

const char* to_string(EnumerationMode mode) {
    return mode == EnumerationMode::PureOracle ? "pure" : "pruned";
}

std::uint64_t subset_count(int n, int k_lo, int k_hi) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    k_lo = std::max(k_lo, 0);
    k_hi = std::min(k_hi, n);
    std::uint64_t total = 0;
    unsigned __int128 c = 1;  // C(n, k), exact until it saturates
    bool saturated = false;
    for (int k = 0; k <= k_hi; ++k) {
        if (k > 0 && !saturated) {
            c = c * static_cast<unsigned>(n - k + 1) / static_cast<unsigned>(k);
            if (c > kMax) saturated = true;
        }
        if (k < k_lo) continue;
        if (saturated) return kMax;
        const auto ck = static_cast<std::uint64_t>(c);
        if (total > kMax - ck) return kMax;
        total += ck;
    }
    return total;
}

namespace {

void require_kmax(int k_max) {
    if (k_max < 2) throw InputError("enumerate_minimals: k_max must be at least 2, got " + std::to_string(k_max));
}

void check_pure_budget(const Grid& g, int k_max, const EnumerationOptions& options) {
    const std::uint64_t needed = subset_count(g.size(), 2, k_max);
    if (needed > options.budget) {
        throw ResourceError("pure enumeration of " + to_string(g) + " up to k=" + std::to_string(k_max) +
                                " needs " + std::to_string(needed) + " subset checks, budget is " +
                                std::to_string(options.budget),
                            needed, options.budget);
    }
}

MinimalCatalog finish(const Grid& g, int k_max, EnumerationMode mode, std::vector<VertexSet> found) {
    std::sort(found.begin(), found.end());
    MinimalCatalog cat{g, mode, k_max, std::move(found), {}};
    for (const auto& s : cat.minimals) ++cat.histogram[static_cast<int>(s.size())];
    return cat;
}

// Side membership bits per vertex index: west, east, south, north.
std::vector<unsigned> side_masks(const Grid& g) {
    std::vector<unsigned> out(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        const auto v = g.vertex(i);
        out[static_cast<std::size_t>(i)] = (g.on_west(v) ? 1u : 0u) | (g.on_east(v) ? 2u : 0u) |
                                           (g.on_south(v) ? 4u : 0u) | (g.on_north(v) ? 8u : 0u);
    }
    return out;
}

// Depth-first walk over increasing index sequences with at most two members
// per row and column. Each visited set of size >= 2 with an opposite-side pair
// is tested for minimality.
class PrunedSearch {
public:
    PrunedSearch(const Grid& g, int k_max, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
                 std::atomic<bool>& abort)
        : grid_(g),
          k_max_(k_max),
          tester_(g),
          sides_(side_masks(g)),
          rows_(static_cast<std::size_t>(g.height()), 0),
          cols_(static_cast<std::size_t>(g.width()), 0),
          nodes_(nodes),
          budget_(budget),
          abort_(abort) {}

    void run_root(int first, std::vector<VertexSet>& out) {
        chosen_.clear();
        side_count_.fill(0);
        push(first);
        visit(first, out);
        pop(first);
        flush();
    }

private:
    void push(int i) {
        const auto v = grid_.vertex(i);
        ++cols_[static_cast<std::size_t>(v.x)];
        ++rows_[static_cast<std::size_t>(v.y)];
        for (int b = 0; b < 4; ++b) side_count_[static_cast<std::size_t>(b)] += (sides_[static_cast<std::size_t>(i)] >> b) & 1u;
        chosen_.push_back(i);
    }

    void pop(int i) {
        const auto v = grid_.vertex(i);
        --cols_[static_cast<std::size_t>(v.x)];
        --rows_[static_cast<std::size_t>(v.y)];
        for (int b = 0; b < 4; ++b) side_count_[static_cast<std::size_t>(b)] -= (sides_[static_cast<std::size_t>(i)] >> b) & 1u;
        chosen_.pop_back();
    }

    bool opposite_pair() const {
        return (side_count_[0] && side_count_[1]) || (side_count_[2] && side_count_[3]);
    }

    void visit(int last, std::vector<VertexSet>& out) {
        if (++local_nodes_ >= 4096) flush();
        if (abort_.load(std::memory_order_relaxed)) return;
        if (chosen_.size() >= 2 && opposite_pair() && tester_.minimal(chosen_)) {
            out.push_back(from_indices(grid_, chosen_));
        }
        if (static_cast<int>(chosen_.size()) >= k_max_) return;
        for (int next = last + 1; next < grid_.size(); ++next) {
            const auto v = grid_.vertex(next);
            if (cols_[static_cast<std::size_t>(v.x)] >= 2 || rows_[static_cast<std::size_t>(v.y)] >= 2) continue;
            push(next);
            visit(next, out);
            pop(next);
        }
    }

    void flush() {
        const auto total = nodes_.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
        local_nodes_ = 0;
        if (total > budget_) abort_.store(true, std::memory_order_relaxed);
    }

    Grid grid_;
    int k_max_;
    ResolvingTester tester_;
    std::vector<unsigned> sides_;
    std::vector<int> rows_;
    std::vector<int> cols_;
    std::array<unsigned, 4> side_count_{};
    std::vector<int> chosen_;
    std::uint64_t local_nodes_ = 0;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::atomic<bool>& abort_;
};

[[noreturn]] void throw_pruned_budget(const Grid& g, std::uint64_t nodes, std::uint64_t budget) {
    throw ResourceError("pruned enumeration of " + to_string(g) + " exceeded its budget of " +
                            std::to_string(budget) + " search nodes (reached " + std::to_string(nodes) + ")",
                        nodes, budget);
}

// All k-subsets whose largest index is `top`, in colex order.
void scan_top(ResolvingTester& tester, const Grid& g, int k, int top, std::vector<VertexSet>& out) {
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end() - 1, 0);
    c.back() = top;
    const int head = k - 1;
    while (true) {
        if (tester.minimal(c)) out.push_back(from_indices(g, c));
        int i = 0;
        while (i < head && c[static_cast<std::size_t>(i)] + 1 ==
                               (i + 1 < head ? c[static_cast<std::size_t>(i + 1)] : top)) {
            ++i;
        }
        if (i == head) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
    }
}

}  // namespace

MinimalCatalog enumerate_minimals(const Grid& g, int k_max, EnumerationMode mode,
                                  const EnumerationOptions& options) {
    require_kmax(k_max);
    k_max = std::min(k_max, g.size());
    const int n = g.size();

    if (mode == EnumerationMode::PureOracle) {
        check_pure_budget(g, k_max, options);
        std::vector<VertexSet> found;
        for (int k = 2; k <= k_max; ++k) {
            std::vector<std::vector<VertexSet>> buckets(static_cast<std::size_t>(n));
#pragma omp parallel
            {
                ResolvingTester tester(g);
#pragma omp for schedule(dynamic)
                for (int top = k - 1; top < n; ++top) {
                    scan_top(tester, g, k, top, buckets[static_cast<std::size_t>(top)]);
                }
            }
            for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(found));
        }
        return finish(g, k_max, mode, std::move(found));
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::vector<std::vector<VertexSet>> buckets(static_cast<std::size_t>(n));
#pragma omp parallel
    {
        PrunedSearch search(g, k_max, nodes, options.budget, abort);
#pragma omp for schedule(dynamic)
        for (int first = 0; first < n; ++first) {
            search.run_root(first, buckets[static_cast<std::size_t>(first)]);
        }
    }
    if (abort.load()) throw_pruned_budget(g, nodes.load(), options.budget);
    std::vector<VertexSet> found;
    for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(found));
    return finish(g, k_max, mode, std::move(found));
}

namespace reference {

MinimalCatalog enumerate_minimals(const Grid& g, int k_max, EnumerationMode mode,
                                  const EnumerationOptions& options) {
    require_kmax(k_max);
    k_max = std::min(k_max, g.size());
    const int n = g.size();
    std::vector<VertexSet> found;

    if (mode == EnumerationMode::PureOracle) {
        check_pure_budget(g, k_max, options);
        ResolvingTester tester(g);
        for (int k = 2; k <= k_max; ++k) {
            // Colex successor: bump the lowest position that can move, reset those below it.
            std::vector<int> c(static_cast<std::size_t>(k));
            std::iota(c.begin(), c.end(), 0);
            while (true) {
                if (tester.minimal(c)) found.push_back(from_indices(g, c));
                int i = 0;
                while (i < k && c[static_cast<std::size_t>(i)] + 1 ==
                                    (i + 1 < k ? c[static_cast<std::size_t>(i + 1)] : n)) {
                    ++i;
                }
                if (i == k) break;
                ++c[static_cast<std::size_t>(i)];
                for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
            }
        }
        return finish(g, k_max, mode, std::move(found));
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    PrunedSearch search(g, k_max, nodes, options.budget, abort);
    for (int first = 0; first < n && !abort.load(); ++first) search.run_root(first, found);
    if (abort.load()) throw_pruned_budget(g, nodes.load(), options.budget);
    return finish(g, k_max, mode, std::move(found));
}

}  // namespace reference

std::optional<VertexSet> find_special_minimal(const Grid& g, int k,
                                              const std::function<bool(const VertexSet&)>& predicate) {
    const int n = g.size();
    if (k < 1 || k > n) return std::nullopt;
    ResolvingTester tester(g);
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        VertexSet s = from_indices(g, c);
        if (predicate(s) && tester.minimal(c)) return s;
        // Lex successor: rightmost position that can still advance.
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool certify_bound(const Grid& g, const EnumerationOptions& options) {
    g.require_characterizable();
    const int bound = 2 * g.n() - 2;
    const auto cat = enumerate_minimals(g, 2 * g.n(), EnumerationMode::PureOracle, options);
    if (cat.histogram.empty()) return false;
    return cat.histogram.rbegin()->first == bound;
}

}  // namespace gridresolve
