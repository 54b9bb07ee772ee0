#pragma once

#include "minorlab/graph.hpp"

#include <vector>

namespace minorlab {

/// A set of pairwise disjoint host edges.
struct MatchingCert {
    std::vector<Edge> edges;

    [[nodiscard]] auto size() const -> int { return static_cast<int>(edges.size()); }
    [[nodiscard]] auto is_valid_for(const Graph& g) const -> bool;
};

/// A proper colouring using exactly the colours 0..count-1.
struct ColoringCert {
    std::vector<int> colour_of;
    int count = 0;

    [[nodiscard]] auto is_valid_for(const Graph& g) const -> bool;
};

/// True iff no three vertices are pairwise non-adjacent (the complement is triangle-free).
[[nodiscard]] auto alpha_at_most_2(const Graph& g) -> bool;

[[nodiscard]] auto is_triangle_free(const Graph& g) -> bool;

/// A maximum clique, found by bitset branch and bound with a greedy colouring bound.
[[nodiscard]] auto max_clique(const Graph& g) -> VertexSet;
[[nodiscard]] auto clique_number(const Graph& g) -> int;

inline constexpr int independence_order_limit = 32;
/// Exact independence number; order <= 32.
[[nodiscard]] auto independence_number(const Graph& g) -> int;

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
[[nodiscard]] auto max_matching(const Graph& g) -> MatchingCert;

inline constexpr int chromatic_order_limit = 20;
/// Minimum colouring by iterative deepening on k with DSATUR branching; order <= 20.
[[nodiscard]] auto chromatic_number_exact(const Graph& g) -> ColoringCert;

/// Minimum colouring of a graph with independence number at most two: colour
/// classes are the edges of a maximum matching of the complement plus singletons,
/// so the count is n minus the matching number of the complement.
[[nodiscard]] auto chromatic_alpha2(const Graph& g) -> ColoringCert;

} // namespace minorlab
