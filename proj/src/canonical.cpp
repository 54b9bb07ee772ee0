#include "minorlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace minorlab {

namespace {

using Rows = std::array<std::uint64_t, max_order>;

class Labeller {
public:
    explicit Labeller(const Graph& g) : g_(g), n_(g.order()) {}

    auto run() -> Rows
    {
        std::vector<int> colours(n_, 0);
        refine(colours);
        search(colours);
        return best_;
    }

private:
    // Repeatedly split colour classes by the count of neighbours in every class,
    // renumbering by sorted signature so the result does not depend on vertex ids.
    void refine(std::vector<int>& colours) const
    {
        int classes = n_ == 0 ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
        while (true) {
            std::vector<std::uint64_t> cells(classes, 0);
            for (int v = 0; v < n_; ++v)
                cells[colours[v]] |= bit(v);

            std::vector<std::vector<int>> signature(n_);
            for (int v = 0; v < n_; ++v) {
                auto& s = signature[v];
                s.reserve(classes + 1);
                s.push_back(colours[v]);
                for (int c = 0; c < classes; ++c)
                    s.push_back(std::popcount(g_.row(v) & cells[c]));
            }
            std::map<std::vector<int>, int> order;
            for (const auto& s : signature)
                order.emplace(s, 0);
            int next = 0;
            for (auto& [_, idx] : order)
                idx = next++;
            for (int v = 0; v < n_; ++v)
                colours[v] = order[signature[v]];
            if (next == classes)
                return;
            classes = next;
        }
    }

    void search(const std::vector<int>& colours)
    {
        std::map<int, std::uint64_t> cells;
        for (int v = 0; v < n_; ++v)
            cells[colours[v]] |= bit(v);

        int target = -1;
        int target_size = max_order + 1;
        for (auto [c, mask] : cells) {
            const int size = std::popcount(mask);
            if (size > 1 && size < target_size) {
                target = c;
                target_size = size;
            }
        }
        if (target < 0) {
            leaf(colours);
            return;
        }

        std::vector<Vertex> tried;
        for_each_bit(cells[target], [&](Vertex v) {
            for (auto t : tried)
                if ((g_.row(v) & ~bit(t)) == (g_.row(t) & ~bit(v)))
                    return;
            tried.push_back(v);

            auto next = colours;
            for (int x = 0; x < n_; ++x)
                if (next[x] > target || (next[x] == target && x != v))
                    ++next[x];
            refine(next);
            search(next);
        });
    }

    void leaf(const std::vector<int>& colours)
    {
        Rows rows{};
        for (int v = 0; v < n_; ++v) {
            std::uint64_t r = 0;
            for_each_bit(g_.row(v), [&](Vertex w) { r |= bit(colours[w]); });
            rows[colours[v]] = r;
        }
        if (!have_best_ || rows > best_) {
            best_ = rows;
            have_best_ = true;
        }
    }

    const Graph& g_;
    int n_;
    Rows best_{};
    bool have_best_ = false;
};

auto graph_from_rows(int n, const Rows& rows) -> Graph
{
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for_each_bit(rows[u] & ~low_mask(u + 1), [&](Vertex v) { out.add_edge(u, v); });
    return out;
}

auto form_of(const Graph& canon) -> CanonicalForm
{
    CanonicalForm f;
    const int n = canon.order();
    const int row_bytes = (n + 7) / 8;
    f.bytes.reserve(1 + static_cast<std::size_t>(n) * row_bytes);
    f.bytes.push_back(static_cast<std::uint8_t>(n));
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < row_bytes; ++b)
            f.bytes.push_back(static_cast<std::uint8_t>(canon.row(v) >> (8 * b)));
    return f;
}

} // namespace

auto CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept -> std::size_t
{
    std::size_t h = 1469598103934665603ULL;
    for (auto b : f.bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

auto canonical_graph(const Graph& g) -> Graph
{
    if (g.order() > canonical_order_limit)
        throw GraphError("canonical_label: order " + std::to_string(g.order()) + " exceeds 16");
    Labeller labeller(g);
    return graph_from_rows(g.order(), labeller.run());
}

auto canonical_label(const Graph& g) -> CanonicalForm { return form_of(canonical_graph(g)); }

void for_each_triangle_free(int n, const std::function<void(const Graph&)>& visit)
{
    if (n < 1 || n > 10)
        throw GraphError("generate_triangle_free: n must be in 1..10, got " + std::to_string(n));

    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        for (const auto& g : level) {
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
                if (!g.is_independent(VertexSet{s}))
                    continue;
                Graph h(k + 1);
                for (auto [a, b] : g.edges())
                    h.add_edge(a, b);
                for_each_bit(s, [&](Vertex v) { h.add_edge(v, k); });
                auto canon = canonical_graph(h);
                if (seen.insert(form_of(canon)).second)
                    next.push_back(canon);
            }
        }
        level = std::move(next);
    }
    for (const auto& g : level)
        visit(g);
}

auto generate_triangle_free(int n) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for_each_triangle_free(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace minorlab
