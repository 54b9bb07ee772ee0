#include "minorlab/invariants.hpp"

#include <algorithm>
#include <deque>

namespace minorlab {

auto MatchingCert::is_valid_for(const Graph& g) const -> bool
{
    std::uint64_t used = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            return false;
        if ((used & (bit(u) | bit(v))) != 0)
            return false;
        used |= bit(u) | bit(v);
    }
    return true;
}

auto ColoringCert::is_valid_for(const Graph& g) const -> bool
{
    if (static_cast<int>(colour_of.size()) != g.order())
        return false;
    std::vector<bool> seen(count, false);
    for (int c : colour_of) {
        if (c < 0 || c >= count)
            return false;
        seen[c] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        return false;
    for (auto [u, v] : g.edges())
        if (colour_of[u] == colour_of[v])
            return false;
    return true;
}

auto is_triangle_free(const Graph& g) -> bool
{
    for (auto [u, v] : g.edges())
        if ((g.row(u) & g.row(v)) != 0)
            return false;
    return true;
}

auto alpha_at_most_2(const Graph& g) -> bool { return is_triangle_free(complement(g)); }

namespace {

// Vertices in reverse degeneracy order: repeatedly strip a minimum-degree vertex
// (lowest id on ties); the core vertices removed last come first.
auto degeneracy_order(const Graph& g) -> std::vector<Vertex>
{
    const int n = g.order();
    std::vector<Vertex> removed;
    removed.reserve(n);
    auto alive = g.vertices();
    while (!alive.empty()) {
        Vertex pick = -1;
        int pick_deg = max_order + 1;
        for_each_bit(alive.mask(), [&](Vertex v) {
            const int d = std::popcount(g.row(v) & alive.mask());
            if (d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        removed.push_back(pick);
        alive.erase(pick);
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : order_(degeneracy_order(g)), n_(g.order())
    {
        std::vector<int> position(n_);
        for (int i = 0; i < n_; ++i)
            position[order_[i]] = i;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t r = 0;
            for_each_bit(g.row(order_[i]), [&](Vertex w) { r |= bit(position[w]); });
            rows_[i] = r;
        }
    }

    auto run() -> VertexSet
    {
        expand(0, low_mask(n_));
        std::uint64_t out = 0;
        for_each_bit(best_, [&](Vertex i) { out |= bit(order_[i]); });
        return VertexSet{out};
    }

private:
    void expand(std::uint64_t current, std::uint64_t candidates)
    {
        // Greedy sequential colouring of the candidates gives the bound.
        std::vector<std::pair<Vertex, int>> coloured;
        coloured.reserve(std::popcount(candidates));
        std::uint64_t uncoloured = candidates;
        int colour = 0;
        while (uncoloured != 0) {
            ++colour;
            std::uint64_t q = uncoloured;
            while (q != 0) {
                const Vertex v = std::countr_zero(q);
                q &= ~bit(v);
                uncoloured &= ~bit(v);
                q &= ~rows_[v];
                coloured.emplace_back(v, colour);
            }
        }

        const int size = std::popcount(current);
        for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
            auto [v, bound] = *it;
            if (size + bound <= best_size_)
                return;
            const std::uint64_t next = candidates & rows_[v];
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = current | bit(v);
                }
            } else {
                expand(current | bit(v), next);
            }
            candidates &= ~bit(v);
        }
    }

    std::vector<Vertex> order_;
    int n_;
    std::array<std::uint64_t, max_order> rows_{};
    std::uint64_t best_ = 0;
    int best_size_ = 0;
};

class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_)
    {
    }

    auto run() -> MatchingCert
    {
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] != -1)
                continue;
            Vertex u = find_path(v);
            while (u != -1) {
                const Vertex pv = parent_[u];
                const Vertex next = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = next;
            }
        }
        MatchingCert out;
        for (Vertex v = 0; v < n_; ++v)
            if (match_[v] > v)
                out.edges.emplace_back(v, match_[v]);
        return out;
    }

private:
    auto lowest_common_ancestor(Vertex a, Vertex b) -> Vertex
    {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1)
                break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    auto find_path(Vertex root) -> Vertex
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (Vertex i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to : g_.neighbours(v).to_vector()) {
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const Vertex shared = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, shared, to);
                    mark_path(to, shared, v);
                    for (Vertex i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = shared;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1)
                        return to;
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

// Decides k-colourability by DSATUR backtracking: branch on the uncoloured vertex
// with the most distinct neighbour colours (then highest degree, then lowest id),
// opening at most one new colour per branch.
class Colourer {
public:
    Colourer(const Graph& g, int k) : g_(g), n_(g.order()), k_(k), colour_(n_, -1), forbidden_(n_, 0) {}

    auto run() -> bool { return assign(0, 0); }
    [[nodiscard]] auto colours() const -> const std::vector<int>& { return colour_; }

private:
    auto assign(int done, int used) -> bool
    {
        if (done == n_)
            return true;
        Vertex pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != -1)
                continue;
            const int sat = std::popcount(forbidden_[v]);
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((forbidden_[pick] >> c) & 1U)
                continue;
            colour_[pick] = c;
            std::vector<std::pair<Vertex, std::uint32_t>> saved;
            for_each_bit(g_.row(pick), [&](Vertex w) {
                if (colour_[w] == -1) {
                    saved.emplace_back(w, forbidden_[w]);
                    forbidden_[w] |= std::uint32_t{1} << c;
                }
            });
            if (assign(done + 1, std::max(used, c + 1)))
                return true;
            for (auto [w, f] : saved)
                forbidden_[w] = f;
            colour_[pick] = -1;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::uint32_t> forbidden_;
};

} // namespace

auto max_clique(const Graph& g) -> VertexSet
{
    CliqueSearch search(g);
    return search.run();
}

auto clique_number(const Graph& g) -> int { return max_clique(g).size(); }

auto independence_number(const Graph& g) -> int
{
    if (g.order() > independence_order_limit)
        throw GraphError("independence_number: order " + std::to_string(g.order()) + " exceeds 32");
    return clique_number(complement(g));
}

auto max_matching(const Graph& g) -> MatchingCert
{
    Blossom blossom(g);
    return blossom.run();
}

auto chromatic_number_exact(const Graph& g) -> ColoringCert
{
    const int n = g.order();
    if (n > chromatic_order_limit)
        throw GraphError("chromatic_number_exact: order " + std::to_string(n) + " exceeds 20");
    if (n == 0)
        return {};
    for (int k = std::max(1, clique_number(g));; ++k) {
        Colourer colourer(g, k);
        if (colourer.run())
            return ColoringCert{colourer.colours(), k};
    }
}

auto chromatic_alpha2(const Graph& g) -> ColoringCert
{
    if (!alpha_at_most_2(g))
        throw GraphError("chromatic_alpha2: graph has three pairwise non-adjacent vertices");
    const int n = g.order();
    const auto matching = max_matching(complement(g));
    std::vector<Vertex> partner(n, -1);
    for (auto [u, v] : matching.edges) {
        partner[u] = v;
        partner[v] = u;
    }
    ColoringCert out{std::vector<int>(n, -1), 0};
    for (Vertex v = 0; v < n; ++v) {
        if (out.colour_of[v] != -1)
            continue;
        out.colour_of[v] = out.count;
        if (partner[v] != -1)
            out.colour_of[partner[v]] = out.count;
        ++out.count;
    }
    return out;
}

} // namespace minorlab
