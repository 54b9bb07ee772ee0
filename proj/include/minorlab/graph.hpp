#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorlab {

inline constexpr int max_order = 64;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an operation's precondition on its input does not hold.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr auto bit(Vertex v) -> std::uint64_t { return std::uint64_t{1} << v; }

constexpr auto low_mask(int n) -> std::uint64_t
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A subset of the vertices of some host graph, one bit per vertex id.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

    static auto of(std::initializer_list<Vertex> vs) -> VertexSet
    {
        VertexSet s;
        for (auto v : vs)
            s.insert(v);
        return s;
    }

    static auto range(int n) -> VertexSet { return VertexSet{low_mask(n)}; }

    [[nodiscard]] constexpr auto mask() const -> std::uint64_t { return mask_; }
    [[nodiscard]] constexpr auto size() const -> int { return std::popcount(mask_); }
    [[nodiscard]] constexpr auto empty() const -> bool { return mask_ == 0; }
    [[nodiscard]] constexpr auto contains(Vertex v) const -> bool { return (mask_ >> v) & 1U; }
    [[nodiscard]] constexpr auto first() const -> Vertex { return std::countr_zero(mask_); }

    constexpr void insert(Vertex v) { mask_ |= bit(v); }
    constexpr void erase(Vertex v) { mask_ &= ~bit(v); }

    [[nodiscard]] auto to_vector() const -> std::vector<Vertex>;

    friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a.mask_ | b.mask_}; }
    friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a.mask_ & b.mask_}; }
    friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a.mask_ & ~b.mask_}; }
    friend constexpr auto operator==(VertexSet, VertexSet) -> bool = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Iterate the members of a 64-bit mask in ascending order.
template <typename F>
constexpr void for_each_bit(std::uint64_t mask, F&& f)
{
    while (mask != 0) {
        f(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
}

/// Simple undirected graph on at most 64 vertices, stored as adjacency rows.
///
/// Rows are symmetric, the diagonal is clear, and no bit at or above n is set.
/// Values are immutable in practice: every transforming operation returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    [[nodiscard]] auto order() const -> int { return n_; }
    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::range(n_); }
    [[nodiscard]] auto row(Vertex v) const -> std::uint64_t { return adj_[v]; }
    [[nodiscard]] auto neighbours(Vertex v) const -> VertexSet { return VertexSet{adj_[v]}; }
    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return (adj_[u] >> v) & 1U; }
    [[nodiscard]] auto degree(Vertex v) const -> int { return std::popcount(adj_[v]); }

    [[nodiscard]] auto edge_count() const -> int;
    [[nodiscard]] auto edges() const -> std::vector<Edge>;
    [[nodiscard]] auto min_degree() const -> int;
    [[nodiscard]] auto max_degree() const -> int;

    /// Vertices outside `s` adjacent to some member of `s`.
    [[nodiscard]] auto neighbourhood(VertexSet s) const -> VertexSet;
    /// Number of edges with one end in `a` and the other in `b` (sets assumed disjoint).
    [[nodiscard]] auto edges_between(VertexSet a, VertexSet b) const -> int;
    [[nodiscard]] auto is_connected(VertexSet s) const -> bool;
    [[nodiscard]] auto is_clique(VertexSet s) const -> bool;
    [[nodiscard]] auto is_independent(VertexSet s) const -> bool;
    /// Connected components of the subgraph induced by `s`, ordered by least member.
    [[nodiscard]] auto components(VertexSet s) const -> std::vector<VertexSet>;
    /// Vertices of `within` reachable from `start` inside `within`.
    [[nodiscard]] auto reach(Vertex start, VertexSet within) const -> VertexSet;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    friend auto operator==(const Graph&, const Graph&) -> bool = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::array<std::uint64_t, max_order> adj_{};
};

[[nodiscard]] auto complement(const Graph& g) -> Graph;

/// Subgraph induced by `s`, relabelled 0..|s|-1 in ascending original-id order.
[[nodiscard]] auto induced_subgraph(const Graph& g, VertexSet s) -> Graph;

/// Contract edge uv. The merged vertex takes the smaller id's slot; ids above the
/// larger endpoint shift down by one.
[[nodiscard]] auto contract_edge(const Graph& g, Vertex u, Vertex v) -> Graph;

/// Relabel so that vertex v of `g` becomes perm[v].
[[nodiscard]] auto permute(const Graph& g, const std::vector<Vertex>& perm) -> Graph;

/// Disjoint union, `b` relabelled after `a`.
[[nodiscard]] auto disjoint_union(const Graph& a, const Graph& b) -> Graph;
/// Disjoint union plus every edge between the two parts.
[[nodiscard]] auto join(const Graph& a, const Graph& b) -> Graph;

namespace named {
[[nodiscard]] auto complete(int n) -> Graph;
[[nodiscard]] auto empty(int n) -> Graph;
[[nodiscard]] auto cycle(int n) -> Graph;
[[nodiscard]] auto path(int n) -> Graph;
[[nodiscard]] auto petersen() -> Graph;
/// Circulant graph: i ~ j iff (i - j) mod n is in `distances` or its negation.
[[nodiscard]] auto circulant(int n, const std::vector<int>& distances) -> Graph;
} // namespace named

} // namespace minorlab
