#include "gridresolve/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "gridresolve/errors.hpp"

namespace gridresolve {

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::BranchBound: return "bb";
        case Algorithm::ExhaustiveMinimals: return "exhaustive";
        case Algorithm::Greedy: return "greedy";
    }
    return "?";
}

const char* to_string(Proof p) { return p == Proof::Optimal ? "optimal" : "feasible"; }

const char* to_string(MinimalityVerdict v) {
    switch (v) {
        case MinimalityVerdict::Minimal: return "minimal";
        case MinimalityVerdict::ResolvingNotMinimal: return "resolving-not-minimal";
        case MinimalityVerdict::NotResolving: return "not-resolving";
    }
    return "?";
}

WeightMap::WeightMap(const Grid& g, std::vector<Weight> weights) : grid_(g), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<std::size_t>(g.size())) {
        throw InputError("weight map has " + std::to_string(weights_.size()) + " entries, grid " + to_string(g) +
                         " has " + std::to_string(g.size()) + " vertices");
    }
    for (Weight x : weights_) {
        if (x > kMaxTotalWeight || total_ > kMaxTotalWeight - x) {
            throw InputError("total vertex weight exceeds 2^62");
        }
        total_ += x;
    }
}

WeightMap WeightMap::unit(const Grid& g) {
    return WeightMap(g, std::vector<Weight>(static_cast<std::size_t>(g.size()), 1));
}

Weight WeightMap::sum(const VertexSet& S) const {
    Weight s = 0;
    for (const auto& v : S) s += (*this)[v];
    return s;
}

bool Bits::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bits::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t CoverInstance::row_of(const Vertex& u, const Vertex& v) const {
    int i = grid.index(u);
    int j = grid.index(v);
    if (i == j) throw InputError("row_of: vertices must differ");
    if (i > j) std::swap(i, j);
    const int n = grid.size();
    // Rows before i: sum_{a<i} (n - 1 - a)
    const std::size_t before = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) -
                               static_cast<std::size_t>(i) * static_cast<std::size_t>(i + 1) / 2;
    return before + static_cast<std::size_t>(j - i - 1);
}

CoverInstance build_cover_instance(const Grid& g) {
    const int n = g.size();
    CoverInstance inst{g, {}, {}, {}};
    const std::size_t row_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    inst.rows.reserve(row_count);
    inst.row_columns.reserve(row_count);
    inst.column_rows.assign(static_cast<std::size_t>(n), Bits(row_count));
    for (int i = 0; i < n; ++i) {
        const Vertex vi = g.vertex(i);
        for (int j = i + 1; j < n; ++j) {
            const Vertex vj = g.vertex(j);
            const std::size_t r = inst.rows.size();
            inst.rows.emplace_back(i, j);
            Bits cols(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                const Vertex vk = g.vertex(k);
                if (manhattan(vi, vk) != manhattan(vj, vk)) {
                    cols.set(static_cast<std::size_t>(k));
                    inst.column_rows[static_cast<std::size_t>(k)].set(r);
                }
            }
            inst.row_columns.push_back(std::move(cols));
        }
    }
    return inst;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            f(w * 64 + static_cast<std::size_t>(b));
            bits &= bits - 1;
        }
    }
}

// Allowed columns of a row: covering columns not yet forbidden.
std::size_t allowed_count(const Bits& cover, const Bits& forbidden) {
    std::size_t c = 0;
    auto a = cover.words();
    auto f = forbidden.words();
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & ~f[i]));
    return c;
}

Solution greedy(const CoverInstance& inst, const WeightMap& w) {
    const int n = inst.grid.size();
    Bits uncovered(inst.rows.size());
    for (std::size_t r = 0; r < inst.rows.size(); ++r) uncovered.set(r);
    std::vector<int> chosen;
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    Solution sol;
    while (!uncovered.none()) {
        int best = -1;
        std::size_t best_gain = 0;
        for (int c = 0; c < n; ++c) {
            if (taken[static_cast<std::size_t>(c)]) continue;
            std::size_t gain = 0;
            auto cw = inst.column_rows[static_cast<std::size_t>(c)].words();
            auto uw = uncovered.words();
            for (std::size_t i = 0; i < cw.size(); ++i) gain += static_cast<std::size_t>(std::popcount(cw[i] & uw[i]));
            if (gain == 0) continue;
            if (best < 0) {
                best = c;
                best_gain = gain;
                continue;
            }
            // gain / w(c) > best_gain / w(best), cross-multiplied; zero weights rank first.
            const auto lhs = static_cast<unsigned __int128>(gain) * w.at_index(best);
            const auto rhs = static_cast<unsigned __int128>(best_gain) * w.at_index(c);
            if (lhs > rhs) {
                best = c;
                best_gain = gain;
            }
        }
        if (best < 0) throw std::logic_error("greedy: uncovered row with no covering column");
        taken[static_cast<std::size_t>(best)] = true;
        chosen.push_back(best);
        auto uw = uncovered.words();
        auto cw = inst.column_rows[static_cast<std::size_t>(best)].words();
        for (std::size_t i = 0; i < uw.size(); ++i) uw[i] &= ~cw[i];
        ++sol.stats.nodes;
    }
    sol.chosen = from_indices(inst.grid, chosen);
    sol.objective = w.sum(sol.chosen);
    sol.proof = Proof::FeasibleOnly;
    return sol;
}

class BranchAndBound {
public:
    BranchAndBound(const CoverInstance& inst, const WeightMap& w, std::uint64_t budget)
        : inst_(inst), w_(w), budget_(budget) {}

    Solution run(const Solution& incumbent) {
        best_set_ = incumbent.chosen;
        best_cost_ = incumbent.objective;
        Bits uncovered(inst_.rows.size());
        for (std::size_t r = 0; r < inst_.rows.size(); ++r) uncovered.set(r);
        Bits forbidden(static_cast<std::size_t>(inst_.grid.size()));
        dfs(uncovered, forbidden, 0);
        Solution sol;
        sol.chosen = best_set_;
        sol.objective = best_cost_;
        sol.proof = Proof::Optimal;
        sol.stats.nodes = nodes_;
        return sol;
    }

private:
    // Rows whose allowed column sets are pairwise disjoint need distinct columns,
    // so the sum of their cheapest allowed columns bounds any completion.
    // Returns false when some uncovered row has no allowed column.
    bool lower_bound(const Bits& uncovered, const Bits& forbidden, Weight& bound, std::size_t& branch_row) {
        order_.clear();
        bool infeasible = false;
        for_each_bit(uncovered.words(), [&](std::size_t r) {
            const std::size_t c = allowed_count(inst_.row_columns[r], forbidden);
            if (c == 0) infeasible = true;
            order_.emplace_back(c, r);
        });
        if (infeasible) return false;
        std::sort(order_.begin(), order_.end());
        branch_row = order_.front().second;
        Bits used(static_cast<std::size_t>(inst_.grid.size()));
        bound = 0;
        auto uw = used.words();
        auto fw = forbidden.words();
        for (const auto& [count, r] : order_) {
            auto rw = inst_.row_columns[r].words();
            bool disjoint = true;
            for (std::size_t i = 0; i < rw.size() && disjoint; ++i) disjoint = (rw[i] & ~fw[i] & uw[i]) == 0;
            if (!disjoint) continue;
            Weight cheapest = kMaxTotalWeight;
            for (std::size_t i = 0; i < rw.size(); ++i) {
                const std::uint64_t allowed = rw[i] & ~fw[i];
                uw[i] |= allowed;
                for_each_bit(std::span<const std::uint64_t>(&allowed, 1), [&](std::size_t b) {
                    cheapest = std::min(cheapest, w_.at_index(static_cast<int>(i * 64 + b)));
                });
            }
            bound += cheapest;
        }
        return true;
    }

    void dfs(const Bits& uncovered, const Bits& forbidden, Weight cost) {
        if (++nodes_ > budget_) {
            throw ResourceError("branch and bound exceeded its budget of " + std::to_string(budget_) + " nodes",
                                nodes_, budget_);
        }
        if (uncovered.none()) {
            VertexSet s = from_indices(inst_.grid, chosen_);
            if (cost < best_cost_ || (cost == best_cost_ && s < best_set_)) {
                best_cost_ = cost;
                best_set_ = std::move(s);
            }
            return;
        }
        Weight bound = 0;
        std::size_t row = 0;
        if (!lower_bound(uncovered, forbidden, bound, row)) return;
        if (cost + bound > best_cost_) return;

        std::vector<int> columns;
        auto rw = inst_.row_columns[row].words();
        auto fw = forbidden.words();
        for (std::size_t i = 0; i < rw.size(); ++i) {
            const std::uint64_t allowed = rw[i] & ~fw[i];
            for_each_bit(std::span<const std::uint64_t>(&allowed, 1),
                         [&](std::size_t b) { columns.push_back(static_cast<int>(i * 64 + b)); });
        }
        std::stable_sort(columns.begin(), columns.end(),
                         [&](int a, int b) { return w_.at_index(a) < w_.at_index(b); });

        Bits local_forbidden = forbidden;
        for (int c : columns) {
            const Weight next_cost = cost + w_.at_index(c);
            if (next_cost <= best_cost_) {
                Bits next = uncovered;
                auto nw = next.words();
                auto cw = inst_.column_rows[static_cast<std::size_t>(c)].words();
                for (std::size_t i = 0; i < nw.size(); ++i) nw[i] &= ~cw[i];
                chosen_.push_back(c);
                dfs(next, local_forbidden, next_cost);
                chosen_.pop_back();
            }
            local_forbidden.set(static_cast<std::size_t>(c));
        }
    }

    const CoverInstance& inst_;
    const WeightMap& w_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> chosen_;
    std::vector<std::pair<std::size_t, std::size_t>> order_;
    VertexSet best_set_;
    Weight best_cost_ = 0;
};

Solution exhaustive(const Grid& g, const WeightMap& w, const EnumerationOptions& options) {
    // No minimal has three members on a line, hence at most 2 * min(w, h) members.
    const auto cat = enumerate_minimals(g, 2 * g.n(), EnumerationMode::PureOracle, options);
    Solution sol;
    bool have = false;
    for (const auto& s : cat.minimals) {
        const Weight cost = w.sum(s);
        if (!have || cost < sol.objective) {
            sol.chosen = s;
            sol.objective = cost;
            have = true;
        }
    }
    if (!have) throw std::logic_error("exhaustive: catalog has no minimal resolving set");
    sol.proof = Proof::Optimal;
    sol.stats.nodes = cat.minimals.size();
    return sol;
}

}  // namespace

Solution solve_min_weight(const Grid& g, const WeightMap& w, Algorithm algorithm, const SolverOptions& options) {
    if (!(w.grid() == g)) {
        throw InputError("weight map is for grid " + to_string(w.grid()) + ", not " + to_string(g));
    }
    const auto t0 = Clock::now();
    Solution sol;
    switch (algorithm) {
        case Algorithm::Greedy: {
            sol = greedy(build_cover_instance(g), w);
            break;
        }
        case Algorithm::BranchBound: {
            const auto inst = build_cover_instance(g);
            const Solution seed = greedy(inst, w);
            sol = BranchAndBound(inst, w, options.node_budget).run(seed);
            break;
        }
        case Algorithm::ExhaustiveMinimals: {
            sol = exhaustive(g, w, options.enumeration);
            break;
        }
    }
    sol.stats.elapsed_ms = ms_since(t0);
    return sol;
}

MinimalityVerdict minimality_by_weights(const Grid& g, const VertexSet& S, const SolverOptions& options) {
    S.require_within(g);
    const Weight size = S.size();
    std::vector<Weight> weights(static_cast<std::size_t>(g.size()), size + 1);
    for (const auto& v : S) weights[static_cast<std::size_t>(g.index(v))] = 1;
    const auto sol = solve_min_weight(g, WeightMap(g, std::move(weights)), Algorithm::BranchBound, options);
    if (sol.objective > size) return MinimalityVerdict::NotResolving;
    // Any vertex outside S alone costs more than all of S, so the optimum lies inside S.
    if (!sol.chosen.is_subset_of(S)) {
        throw std::logic_error("minimality_by_weights: optimum " + to_string(sol.chosen) + " leaves " + to_string(S));
    }
    return sol.objective == size ? MinimalityVerdict::Minimal : MinimalityVerdict::ResolvingNotMinimal;
}

}  // namespace gridresolve
