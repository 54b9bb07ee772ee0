#pragma once

#include "minorlab/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minorlab {

/// A named small graph used for induced-subgraph freeness tests.
struct Pattern {
    std::string name;
    Graph graph;
    std::string provenance;
};

/// Injective map from pattern vertices to host vertices (image[i] hosts pattern vertex i).
struct Embedding {
    std::vector<Vertex> image;

    friend auto operator==(const Embedding&, const Embedding&) -> bool = default;
};

inline constexpr int pattern_order_limit = 8;

namespace pattern_names {
inline constexpr std::string_view k1_6_bar = "K1_6bar";
inline constexpr std::string_view k1_5_bar = "K1_5bar";
inline constexpr std::string_view k5_plus = "K5plus";
inline constexpr std::string_view h7 = "H7";
inline constexpr std::string_view w5 = "W5";
inline constexpr std::string_view c5 = "C5";
inline constexpr std::string_view k7 = "K7";
inline constexpr std::string_view k8 = "K8";
} // namespace pattern_names

/// The fixed pattern catalog, in a fixed order:
///   K1_6bar  K6 plus an isolated vertex 6
///   K1_5bar  K5 plus an isolated vertex 5
///   K5plus   K5 on 0..4, vertex 5 pendant at 0
///   H7       K5plus plus vertex 6 adjacent to exactly 1,2,3,4
///   W5       C5 on 0..4 plus hub 5
///   C5, K7, K8
[[nodiscard]] auto catalog() -> const std::vector<Pattern>&;

/// Catalog lookup by name; throws GraphError for an unknown name.
[[nodiscard]] auto find_pattern(std::string_view name) -> const Pattern&;

/// True iff `e` maps `pattern` injectively into `host` preserving edges and non-edges.
[[nodiscard]] auto is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) -> bool;

/// An induced copy of `pattern` in `host`, if any. Backtracks over pattern vertices in
/// descending-degree order with bit-mask candidate filtering; pattern order <= 8.
[[nodiscard]] auto contains_induced(const Graph& host, const Graph& pattern) -> std::optional<Embedding>;
[[nodiscard]] auto contains_induced(const Graph& host, const Pattern& pattern) -> std::optional<Embedding>;

struct FreenessResult {
    std::string name;
    bool is_free = true;
    std::optional<Embedding> witness;
};

[[nodiscard]] auto is_pattern_free(const Graph& host, const std::vector<std::string>& names) -> std::vector<FreenessResult>;

} // namespace minorlab
