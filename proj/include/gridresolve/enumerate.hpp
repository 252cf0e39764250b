#pragma once

// Brute-force oracle: exhaustive enumeration of minimal resolving sets.
//
// enumerate_minimals() splits the subset space across OpenMP threads;
// reference::enumerate_minimals() walks it on one thread in colexicographic
// order. Both return the same catalog, sorted shortlex.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gridresolve/grid.hpp"
#include "gridresolve/vertex_set.hpp"

namespace gridresolve {

enum class EnumerationMode {
    /// Every subset of cardinality 2..k_max goes through is_minimal.
    PureOracle,
    /// Skips subsets with three collinear members or without an opposite-side pair.
    TheoremPruned,
};

const char* to_string(EnumerationMode mode);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct EnumerationOptions {
    /// PureOracle: maximum number of subsets. TheoremPruned: maximum search nodes.
    std::uint64_t budget = kDefaultBudget;
};

struct MinimalCatalog {
    Grid grid;
    EnumerationMode mode;
    int k_max;
    std::vector<VertexSet> minimals;
    /// Cardinality -> count, populated cardinalities only.
    std::map<int, std::size_t> histogram;
};

/// Sum of C(n, k) for k in [k_lo, k_hi], saturating at UINT64_MAX.
std::uint64_t subset_count(int n, int k_lo, int k_hi);

/// Throws InputError for k_max < 2 and ResourceError when the budget is exceeded.
MinimalCatalog enumerate_minimals(const Grid& g, int k_max, EnumerationMode mode,
                                  const EnumerationOptions& options = {});

/// Canonically first k-subset that is minimal and satisfies the predicate.
std::optional<VertexSet> find_special_minimal(const Grid& g, int k,
                                              const std::function<bool(const VertexSet&)>& predicate);

/// Enumerates up to 2n and checks the largest minimal has exactly 2n - 2 vertices.
bool certify_bound(const Grid& g, const EnumerationOptions& options = {});

namespace reference {

/// Single-threaded colexicographic walk; kept as the cross-check for the
/// parallel kernels.
MinimalCatalog enumerate_minimals(const Grid& g, int k_max, EnumerationMode mode,
                                  const EnumerationOptions& options = {});

}  // namespace reference

}  // namespace gridresolve
