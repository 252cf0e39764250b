#pragma once

// Minimum-weight resolving sets as weighted set cover.
//
// Rows are unordered vertex pairs, columns are vertices, and column k covers row
// (i, j) when d(i, k) != d(j, k). Because |d(i, k) - d(j, k)| is a nonnegative
// integer, requiring a strictly positive weighted sum of chosen columns is the same
// as requiring at least one chosen covering column.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gridresolve/enumerate.hpp"
#include "gridresolve/grid.hpp"
#include "gridresolve/vertex_set.hpp"

namespace gridresolve {

using Weight = std::uint64_t;

inline constexpr Weight kMaxTotalWeight = Weight{1} << 62;

/// Nonnegative integer weight for every vertex, stored in canonical index order.
class WeightMap {
public:
    /// Throws InputError if the size mismatches or the total exceeds 2^62.
    WeightMap(const Grid& g, std::vector<Weight> weights);

    static WeightMap unit(const Grid& g);

    const Grid& grid() const noexcept { return grid_; }
    Weight operator[](const Vertex& v) const { return weights_[static_cast<std::size_t>(grid_.index(v))]; }
    Weight at_index(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    Weight total() const noexcept { return total_; }
    Weight sum(const VertexSet& S) const;

private:
    Grid grid_;
    std::vector<Weight> weights_;
    Weight total_ = 0;
};

/// Fixed-width bitset over a runtime number of bits.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    bool none() const;
    std::size_t count() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    std::vector<std::uint64_t> words_;
};

struct CoverInstance {
    Grid grid;
    /// Vertex index pairs (i, j), i < j, in lexicographic order.
    std::vector<std::pair<int, int>> rows;
    /// row_columns[r]: columns covering row r.
    std::vector<Bits> row_columns;
    /// column_rows[c]: rows covered by column c.
    std::vector<Bits> column_rows;

    bool covers(std::size_t row, int column) const {
        return row_columns[row].test(static_cast<std::size_t>(column));
    }
    std::size_t row_of(const Vertex& u, const Vertex& v) const;
};

CoverInstance build_cover_instance(const Grid& g);

enum class Algorithm { BranchBound, ExhaustiveMinimals, Greedy };
enum class Proof { Optimal, FeasibleOnly };

const char* to_string(Algorithm a);
const char* to_string(Proof p);

struct SolveStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

struct Solution {
    VertexSet chosen;
    Weight objective = 0;
    Proof proof = Proof::FeasibleOnly;
    SolveStats stats;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolverOptions {
    /// Branch-and-bound node limit.
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Limits for the ExhaustiveMinimals catalog.
    EnumerationOptions enumeration;
};

/// Exact algorithms break objective ties by the shortlex-smallest chosen set.
/// Throws InputError for a weight map built on another grid and ResourceError when
/// a budget is exceeded.
Solution solve_min_weight(const Grid& g, const WeightMap& w, Algorithm algorithm,
                          const SolverOptions& options = {});

enum class MinimalityVerdict { Minimal, ResolvingNotMinimal, NotResolving };

const char* to_string(MinimalityVerdict v);

/// Weight 1 on S and |S| + 1 elsewhere, then reads the verdict off the exact
/// optimum: |S| means minimal, less means resolving but not minimal, more means
/// not resolving.
MinimalityVerdict minimality_by_weights(const Grid& g, const VertexSet& S, const SolverOptions& options = {});

}  // namespace gridresolve
