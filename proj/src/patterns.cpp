#include "minorlab/patterns.hpp"

#include <algorithm>

namespace minorlab {

namespace {

auto clique_plus_isolated(int k) -> Graph { return disjoint_union(named::complete(k), Graph(1)); }

auto make_k5_plus() -> Graph
{
    Graph g(6);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            g.add_edge(u, v);
    g.add_edge(0, 5);
    return g;
}

// Extends K5plus (u = 0, v = 5) by a vertex w = 6 complete to K5plus minus {u, v}.
auto make_h7() -> Graph
{
    Graph g(7);
    for (auto [a, b] : make_k5_plus().edges())
        g.add_edge(a, b);
    for (int x = 1; x <= 4; ++x)
        g.add_edge(6, x);
    return g;
}

auto wheel5() -> Graph { return join(named::cycle(5), Graph(1)); }

auto build_catalog() -> std::vector<Pattern>
{
    using namespace pattern_names;
    return {
        {std::string(k1_6_bar), clique_plus_isolated(6), "complement of the star K1,6; freeness iff min degree >= n-6"},
        {std::string(k1_5_bar), clique_plus_isolated(5), "complement of the star K1,5"},
        {std::string(k5_plus), make_k5_plus(), "K5 with one pendant vertex"},
        {std::string(h7), make_h7(),
         "reconstructed: K5plus with u=0, v=5 and w=6 adjacent to exactly K5plus minus {u,v}"},
        {std::string(w5), wheel5(), "5-wheel"},
        {std::string(c5), named::cycle(5), "5-cycle"},
        {std::string(k7), named::complete(7), "complete graph K7"},
        {std::string(k8), named::complete(8), "complete graph K8"},
    };
}

class InducedMatcher {
public:
    InducedMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern), image_(pattern.order(), -1)
    {
        order_.resize(pattern.order());
        for (int i = 0; i < pattern.order(); ++i)
            order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
    }

    auto run() -> std::optional<Embedding>
    {
        if (pattern_.order() > host_.order())
            return std::nullopt;
        if (extend(0, 0))
            return Embedding{image_};
        return std::nullopt;
    }

private:
    auto extend(std::size_t depth, std::uint64_t used) -> bool
    {
        if (depth == order_.size())
            return true;
        const Vertex p = order_[depth];
        const int p_deg = pattern_.degree(p);
        const int p_nondeg = pattern_.order() - 1 - p_deg;

        std::uint64_t candidates = host_.vertices().mask() & ~used;
        for (std::size_t j = 0; j < depth; ++j) {
            const Vertex q = order_[j];
            const std::uint64_t hrow = host_.row(image_[q]);
            candidates &= pattern_.adjacent(p, q) ? hrow : ~hrow;
        }
        bool found = false;
        for_each_bit(candidates, [&](Vertex h) {
            if (found)
                return;
            const int h_deg = host_.degree(h);
            if (h_deg < p_deg || host_.order() - 1 - h_deg < p_nondeg)
                return;
            image_[p] = h;
            if (extend(depth + 1, used | bit(h)))
                found = true;
            else
                image_[p] = -1;
        });
        return found;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
};

} // namespace

auto catalog() -> const std::vector<Pattern>&
{
    static const std::vector<Pattern> entries = build_catalog();
    return entries;
}

auto find_pattern(std::string_view name) -> const Pattern&
{
    for (const auto& p : catalog())
        if (p.name == name)
            return p;
    throw GraphError("unknown pattern name: " + std::string(name));
}

auto is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) -> bool
{
    const int k = pattern.order();
    if (static_cast<int>(e.image.size()) != k)
        return false;
    std::uint64_t used = 0;
    for (auto h : e.image) {
        if (h < 0 || h >= host.order() || ((used >> h) & 1U))
            return false;
        used |= bit(h);
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (pattern.adjacent(a, b) != host.adjacent(e.image[a], e.image[b]))
                return false;
    return true;
}

auto contains_induced(const Graph& host, const Graph& pattern) -> std::optional<Embedding>
{
    if (pattern.order() > pattern_order_limit)
        throw GraphError("contains_induced: pattern order exceeds 8");
    InducedMatcher matcher(host, pattern);
    return matcher.run();
}

auto contains_induced(const Graph& host, const Pattern& pattern) -> std::optional<Embedding>
{
    return contains_induced(host, pattern.graph);
}

auto is_pattern_free(const Graph& host, const std::vector<std::string>& names) -> std::vector<FreenessResult>
{
    std::vector<FreenessResult> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        auto witness = contains_induced(host, find_pattern(name));
        out.push_back({name, !witness.has_value(), std::move(witness)});
    }
    return out;
}

} // namespace minorlab
