#pragma once

#include "minorlab/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace minorlab {

inline constexpr int canonical_order_limit = 16;

/// Isomorphism-class fingerprint: equal iff the source graphs are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend auto operator==(const CanonicalForm&, const CanonicalForm&) -> bool = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    auto operator()(const CanonicalForm& f) const noexcept -> std::size_t;
};

/// Canonical representative of the isomorphism class of `g` (order <= 16).
///
/// Colour refinement plus individualisation over every branch of the first
/// smallest non-singleton cell; twins in a cell are explored once. The
/// representative is the relabelling whose adjacency rows compare largest.
[[nodiscard]] auto canonical_graph(const Graph& g) -> Graph;

[[nodiscard]] auto canonical_label(const Graph& g) -> CanonicalForm;

/// One representative per isomorphism class of triangle-free graphs on n vertices (1 <= n <= 10).
/// Built by one-vertex augmentation of the (n-1)-vertex classes with canonical-form
/// deduplication. Representatives are canonical graphs, in discovery order.
[[nodiscard]] auto generate_triangle_free(int n) -> std::vector<Graph>;

/// Streaming form of generate_triangle_free.
void for_each_triangle_free(int n, const std::function<void(const Graph&)>& visit);

} // namespace minorlab
