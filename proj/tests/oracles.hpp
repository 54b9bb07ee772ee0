#pragma once

// Brute-force reference implementations. Deliberately naive: adjacency matrices,
// plain recursion, no shared code with the library beyond the Graph type.

#include "minorlab/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using minorlab::Graph;
using Matrix = std::vector<std::vector<bool>>;

inline auto matrix(const Graph& g) -> Matrix
{
    const int n = g.order();
    Matrix m(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m[u][v] = u != v && g.adjacent(u, v);
    return m;
}

inline auto random_graph(std::mt19937_64& rng, int n, double p) -> Graph
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

// Graph on n vertices whose edges are the set bits of `code` in (0,1),(0,2),(1,2),(0,3),... order.
inline auto graph_from_code(int n, std::uint64_t code) -> Graph
{
    Graph g(n);
    int b = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if ((code >> b) & 1U)
                g.add_edge(u, v);
    return g;
}

inline auto has_triangle(const Graph& g) -> bool
{
    const auto m = matrix(g);
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (m[a][b] && m[a][c] && m[b][c])
                    return true;
    return false;
}

inline auto subset_is_clique(const Matrix& m, std::uint32_t s) -> bool
{
    const int n = static_cast<int>(m.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (((s >> a) & 1U) && ((s >> b) & 1U) && !m[a][b])
                return false;
    return true;
}

inline auto subset_is_independent(const Matrix& m, std::uint32_t s) -> bool
{
    const int n = static_cast<int>(m.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (((s >> a) & 1U) && ((s >> b) & 1U) && m[a][b])
                return false;
    return true;
}

inline auto clique_number(const Graph& g) -> int
{
    const auto m = matrix(g);
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << g.order()); ++s)
        if (std::popcount(s) > best && subset_is_clique(m, s))
            best = std::popcount(s);
    return best;
}

inline auto independence_number(const Graph& g) -> int
{
    const auto m = matrix(g);
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << g.order()); ++s)
        if (std::popcount(s) > best && subset_is_independent(m, s))
            best = std::popcount(s);
    return best;
}

// Chromatic number by dynamic programming over vertex subsets.
inline auto chromatic_number(const Graph& g) -> int
{
    const int n = g.order();
    const auto m = matrix(g);
    const std::uint32_t full = (1U << n) - 1;
    std::vector<bool> indep(full + 1);
    for (std::uint32_t s = 0; s <= full; ++s)
        indep[s] = subset_is_independent(m, s);
    std::vector<int> dp(full + 1, n + 1);
    dp[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        // every independent subset of s containing the lowest vertex
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t cls = sub | low;
            if (indep[cls])
                dp[s] = std::min(dp[s], dp[s ^ cls] + 1);
            if (sub == 0)
                break;
        }
    }
    return dp[full];
}

inline auto matching_number(const Graph& g) -> int
{
    const auto m = matrix(g);
    const int n = g.order();
    std::function<int(std::uint32_t)> best = [&](std::uint32_t free) -> int {
        if (free == 0)
            return 0;
        const int v = std::countr_zero(free);
        const std::uint32_t rest = free & ~(1U << v);
        int r = best(rest);
        for (int u = 0; u < n; ++u)
            if (((rest >> u) & 1U) && m[v][u])
                r = std::max(r, 1 + best(rest & ~(1U << u)));
        return r;
    };
    return best((1U << n) - 1);
}

inline auto subset_connected(const Matrix& m, std::uint32_t s) -> bool
{
    if (s == 0)
        return false;
    const int n = static_cast<int>(m.size());
    std::uint32_t seen = 1U << std::countr_zero(s);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < n; ++a) {
            if (!((seen >> a) & 1U))
                continue;
            for (int b = 0; b < n; ++b)
                if (((s >> b) & 1U) && !((seen >> b) & 1U) && m[a][b]) {
                    seen |= 1U << b;
                    grew = true;
                }
        }
    }
    return seen == s;
}

inline auto sets_touch(const Matrix& m, std::uint32_t a, std::uint32_t b) -> bool
{
    const int n = static_cast<int>(m.size());
    for (int x = 0; x < n; ++x)
        if ((a >> x) & 1U)
            for (int y = 0; y < n; ++y)
                if (((b >> y) & 1U) && m[x][y])
                    return true;
    return false;
}

// Hadwiger number: largest family of disjoint connected vertex sets that pairwise
// touch, by enumerating every partial partition of the vertex set.
inline auto hadwiger_number(const Graph& g) -> int
{
    const int n = g.order();
    const auto m = matrix(g);
    std::vector<std::uint32_t> blocks;
    int best = 0;
    std::function<void(int)> assign = [&](int v) {
        if (v == n) {
            const int b = static_cast<int>(blocks.size());
            if (b <= best)
                return;
            for (int i = 0; i < b; ++i)
                if (!subset_connected(m, blocks[i]))
                    return;
            for (int i = 0; i < b; ++i)
                for (int j = i + 1; j < b; ++j)
                    if (!sets_touch(m, blocks[i], blocks[j]))
                        return;
            best = b;
            return;
        }
        assign(v + 1);
        for (auto& blk : blocks) {
            blk |= 1U << v;
            assign(v + 1);
            blk &= ~(1U << v);
        }
        blocks.push_back(1U << v);
        assign(v + 1);
        blocks.pop_back();
    };
    assign(0);
    return best;
}

// Is there an injective map pattern -> host preserving adjacency and non-adjacency?
// Pattern vertices are placed in index order; each placement is checked against all
// earlier ones.
inline auto has_induced_copy(const Graph& host, const Graph& pattern) -> bool
{
    const int k = pattern.order();
    const int n = host.order();
    if (k > n)
        return false;
    const auto hm = matrix(host);
    const auto pm = matrix(pattern);
    std::vector<int> image(k, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k)
            return true;
        for (int h = 0; h < n; ++h) {
            if (used[h])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = pm[i][j] == hm[h][image[j]];
            if (!ok)
                continue;
            image[i] = h;
            used[h] = true;
            if (place(i + 1))
                return true;
            used[h] = false;
        }
        return false;
    };
    return place(0);
}

inline auto isomorphic(const Graph& a, const Graph& b) -> bool
{
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count())
        return false;
    const auto am = matrix(a);
    const auto bm = matrix(b);
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n)
            return true;
        for (int h = 0; h < n; ++h) {
            if (used[h] || a.degree(i) != b.degree(h))
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = am[i][j] == bm[h][image[j]];
            if (!ok)
                continue;
            image[i] = h;
            used[h] = true;
            if (place(i + 1))
                return true;
            used[h] = false;
        }
        return false;
    };
    return place(0);
}

inline auto degree_key(const Graph& g) -> std::vector<int>
{
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// One representative per isomorphism class of triangle-free graphs on n vertices,
// by enumerating all labelled graphs.
inline auto triangle_free_classes(int n) -> std::vector<Graph>
{
    const int pairs = n * (n - 1) / 2;
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    std::vector<Graph> reps;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const auto g = graph_from_code(n, code);
        if (has_triangle(g))
            continue;
        auto& bucket = buckets[degree_key(g)];
        if (std::none_of(bucket.begin(), bucket.end(), [&](const Graph& r) { return isomorphic(g, r); })) {
            bucket.push_back(g);
            reps.push_back(g);
        }
    }
    return reps;
}

inline auto components(const Matrix& m, std::uint32_t s) -> std::vector<std::uint32_t>
{
    const int n = static_cast<int>(m.size());
    std::vector<std::uint32_t> out;
    std::uint32_t left = s;
    while (left != 0) {
        std::uint32_t comp = left & (~left + 1);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a)
                if ((comp >> a) & 1U)
                    for (int b = 0; b < n; ++b)
                        if (((left >> b) & 1U) && !((comp >> b) & 1U) && m[a][b]) {
                            comp |= 1U << b;
                            grew = true;
                        }
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

struct Separation {
    std::vector<int> separator;
    std::uint32_t larger = 0;
    std::uint32_t smaller = 0;
};

inline auto members(std::uint32_t s) -> std::vector<int>
{
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if ((s >> v) & 1U)
            out.push_back(v);
    return out;
}

// Smallest vertex cut leaving exactly two components with the larger of size at
// least min_larger; ties broken by the lexicographically least sorted cut.
inline auto min_separation(const Graph& g, int min_larger) -> std::optional<Separation>
{
    const int n = g.order();
    const auto m = matrix(g);
    const std::uint32_t full = (1U << n) - 1;
    std::optional<Separation> best;
    for (std::uint32_t cut = 0; cut <= full; ++cut) {
        const auto parts = components(m, full & ~cut);
        if (parts.size() != 2)
            continue;
        auto a = parts[0];
        auto b = parts[1];
        if (std::popcount(b) > std::popcount(a))
            std::swap(a, b);
        if (std::popcount(a) < min_larger)
            continue;
        Separation s{members(cut), a, b};
        if (!best || s.separator.size() < best->separator.size() ||
            (s.separator.size() == best->separator.size() && s.separator < best->separator))
            best = s;
    }
    return best;
}

} // namespace oracle
