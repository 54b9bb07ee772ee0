#include "minorlab/graph.hpp"

#include <algorithm>

namespace minorlab {

auto VertexSet::to_vector() const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each_bit(mask_, [&](Vertex v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > max_order)
        throw GraphError("graph order must be in 0..64, got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

auto Graph::edge_count() const -> int
{
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(adj_[u] & ~low_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    return out;
}

auto Graph::min_degree() const -> int
{
    int best = n_ == 0 ? 0 : max_order;
    for (int v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

auto Graph::neighbourhood(VertexSet s) const -> VertexSet
{
    std::uint64_t out = 0;
    for_each_bit(s.mask(), [&](Vertex v) { out |= adj_[v]; });
    return VertexSet{out & ~s.mask()};
}

auto Graph::edges_between(VertexSet a, VertexSet b) const -> int
{
    int total = 0;
    for_each_bit(a.mask(), [&](Vertex v) { total += std::popcount(adj_[v] & b.mask()); });
    return total;
}

auto Graph::reach(Vertex start, VertexSet within) const -> VertexSet
{
    std::uint64_t seen = bit(start) & within.mask();
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](Vertex v) { next |= adj_[v]; });
        next &= within.mask() & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet{seen};
}

auto Graph::is_connected(VertexSet s) const -> bool
{
    if (s.empty())
        return false;
    return reach(s.first(), s) == s;
}

auto Graph::is_clique(VertexSet s) const -> bool
{
    bool ok = true;
    for_each_bit(s.mask(), [&](Vertex v) { ok = ok && ((adj_[v] | bit(v)) & s.mask()) == s.mask(); });
    return ok;
}

auto Graph::is_independent(VertexSet s) const -> bool
{
    bool ok = true;
    for_each_bit(s.mask(), [&](Vertex v) { ok = ok && (adj_[v] & s.mask()) == 0; });
    return ok;
}

auto Graph::components(VertexSet s) const -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    auto rest = s;
    while (!rest.empty()) {
        auto comp = reach(rest.first(), rest);
        out.push_back(comp);
        rest = rest - comp;
    }
    return out;
}

auto complement(const Graph& g) -> Graph
{
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

auto induced_subgraph(const Graph& g, VertexSet s) -> Graph
{
    if ((s.mask() & ~low_mask(g.order())) != 0)
        throw GraphError("induced_subgraph: vertex set exceeds host order");
    const auto ids = s.to_vector();
    Graph out(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j]))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

auto contract_edge(const Graph& g, Vertex u, Vertex v) -> Graph
{
    const int n = g.order();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v || !g.adjacent(u, v))
        throw GraphError("contract_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    const Vertex keep = std::min(u, v);
    const Vertex gone = std::max(u, v);
    auto relabel = [gone](Vertex x) { return x > gone ? x - 1 : x; };

    Graph out(n - 1);
    for (auto [a, b] : g.edges()) {
        Vertex x = a == gone ? keep : a;
        Vertex y = b == gone ? keep : b;
        if (x != y)
            out.add_edge(relabel(x), relabel(y));
    }
    return out;
}

auto permute(const Graph& g, const std::vector<Vertex>& perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.order())
        throw GraphError("permute: permutation size does not match graph order");
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

auto disjoint_union(const Graph& a, const Graph& b) -> Graph
{
    const int offset = a.order();
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + offset, v + offset);
    return out;
}

auto join(const Graph& a, const Graph& b) -> Graph
{
    auto out = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v)
            out.add_edge(u, a.order() + v);
    return out;
}

namespace named {

auto complete(int n) -> Graph
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto empty(int n) -> Graph { return Graph(n); }

auto cycle(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

auto path(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto petersen() -> Graph
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

auto circulant(int n, const std::vector<int>& distances) -> Graph
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int d : distances) {
            const int w = ((v + d) % n + n) % n;
            if (w != v)
                g.add_edge(v, w);
        }
    return g;
}

} // namespace named

} // namespace minorlab
